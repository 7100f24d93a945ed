#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "dtf/app.hpp"

namespace dtf {

namespace {

[[noreturn]] void fail(int line, const std::string& what)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename Int>
Int parse_int(std::string_view word, int line)
{
    Int value{};
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        fail(line, "expected an integer, got '" + std::string(word) + "'");
    return value;
}

void expect_arity(const std::vector<std::string_view>& words, std::size_t arity, int line)
{
    if (words.size() != arity)
        fail(line, "'" + std::string(words[0]) + "' takes " + std::to_string(arity - 1) + " arguments");
}

}  // namespace

ParsedFile parse_instance(std::string_view text)
{
    int n = -1;
    std::vector<std::string> rows;
    std::vector<int> row_lines;
    std::vector<Arc> demands;
    std::map<Arc, int> rounds;
    std::map<Arc, std::int64_t> weights;
    std::optional<Player> target;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty())
            continue;

        const std::string_view key = words[0];
        if (n < 0) {
            if (key != "n")
                fail(line_no, "file must start with 'n <players>'");
            expect_arity(words, 2, line_no);
            n = parse_int<int>(words[1], line_no);
            if (n < 1)
                fail(line_no, "player count must be positive");
            continue;
        }
        if (static_cast<int>(rows.size()) < n) {
            std::string_view row;
            if (key == "matrix") {
                expect_arity(words, 2, line_no);
                row = words[1];
            } else if (words.size() == 1) {
                row = key;
            } else {
                fail(line_no, "expected matrix row " + std::to_string(rows.size()));
            }
            if (static_cast<int>(row.size()) != n)
                fail(line_no, "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
            const int i = static_cast<int>(rows.size());
            for (int j = 0; j < n; ++j) {
                const char c = row[j];
                if (i == j ? c != '-' : (c != '0' && c != '1'))
                    fail(line_no, "bad matrix entry '" + std::string(1, c) + "' at column " + std::to_string(j));
                if (j < i && (c == '1') == (rows[j][i] == '1'))
                    fail(line_no, "players " + std::to_string(j) + " and " + std::to_string(i) +
                                      (c == '1' ? " both beat each other" : " both lose to each other"));
            }
            rows.emplace_back(row);
            row_lines.push_back(line_no);
            continue;
        }

        if (key == "demand") {
            expect_arity(words, 3, line_no);
            demands.push_back({parse_int<int>(words[1], line_no), parse_int<int>(words[2], line_no)});
        } else if (key == "round") {
            expect_arity(words, 4, line_no);
            Arc a{parse_int<int>(words[1], line_no), parse_int<int>(words[2], line_no)};
            if (!rounds.emplace(a, parse_int<int>(words[3], line_no)).second)
                fail(line_no, "second round for the same demand");
        } else if (key == "weight") {
            expect_arity(words, 4, line_no);
            Arc a{parse_int<int>(words[1], line_no), parse_int<int>(words[2], line_no)};
            if (!weights.emplace(a, parse_int<std::int64_t>(words[3], line_no)).second)
                fail(line_no, "second weight for the same demand");
        } else if (key == "target") {
            expect_arity(words, 2, line_no);
            if (target)
                fail(line_no, "second target");
            target = parse_int<int>(words[1], line_no);
            if (*target < 0 || *target >= n)
                fail(line_no, "target out of range");
        } else {
            fail(line_no, "unknown keyword '" + std::string(key) + "'");
        }
    }

    if (n < 0)
        fail(line_no, "empty file");
    if (static_cast<int>(rows.size()) < n)
        fail(line_no, "expected " + std::to_string(n) + " matrix rows, got " + std::to_string(rows.size()));

    auto t = TournamentDigraph::from_predicate(n, [&](Player u, Player v) { return rows[u][v] == '1'; });
    if (target) {
        if (!demands.empty() || !rounds.empty() || !weights.empty())
            fail(line_no, "a target file cannot carry demands, rounds or weights");
        return TfInstance{std::move(t), *target};
    }
    DemandInstance inst{std::move(t), std::move(demands), std::move(rounds), std::move(weights)};
    validate_instance(inst);
    return inst;
}

namespace {

void write_header(std::ostringstream& out, const TournamentDigraph& t)
{
    const int n = t.size();
    out << "n " << n << '\n';
    for (Player u = 0; u < n; ++u) {
        out << "matrix ";
        for (Player v = 0; v < n; ++v)
            out << (u == v ? '-' : t.beats(u, v) ? '1' : '0');
        out << '\n';
    }
}

}  // namespace

std::string serialize_instance(const DemandInstance& inst)
{
    std::ostringstream out;
    write_header(out, inst.tournament);
    std::vector<Arc> demands = inst.demands;
    std::sort(demands.begin(), demands.end());
    for (const Arc& a : demands)
        out << "demand " << a.winner << ' ' << a.loser << '\n';
    for (const auto& [a, r] : inst.rounds)
        out << "round " << a.winner << ' ' << a.loser << ' ' << r << '\n';
    for (const auto& [a, w] : inst.weights)
        out << "weight " << a.winner << ' ' << a.loser << ' ' << w << '\n';
    return out.str();
}

std::string serialize_instance(const TfInstance& tf)
{
    std::ostringstream out;
    write_header(out, tf.tournament);
    out << "target " << tf.target << '\n';
    return out.str();
}

}  // namespace dtf
