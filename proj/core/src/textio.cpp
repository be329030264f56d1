#include "corequot/textio.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace corequot {

namespace {

[[noreturn]] void bad_token(std::string_view token, const char* expected) {
    throw std::invalid_argument("cannot parse '" + std::string(token) + "' as " + expected);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

long long parse_integer(std::string_view token, const char* expected) {
    token = trim(token);
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty())
        bad_token(token, expected);
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// "a1 a2 ..." or "-" for an empty row.
std::vector<long long> parse_row(std::string_view text) {
    text = trim(text);
    if (text.empty() || text == "-")
        return {};
    std::vector<long long> row;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ' ') {
            const std::string_view token = text.substr(start, i - start);
            if (!token.empty())
                row.push_back(parse_integer(token, "a row entry"));
            start = i + 1;
        }
    }
    return row;
}

std::string format_row(const std::vector<long long>& row) {
    if (row.empty())
        return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i)
            out << ' ';
        out << row[i];
    }
    return out.str();
}

std::pair<std::string_view, std::string_view> split_rows(std::string_view text,
                                                         const char* what) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument(std::string("expected 'top / bottom' for a ") + what);
    return {text.substr(0, slash), text.substr(slash + 1)};
}

}  // namespace

std::string format_partition(const Partition& p) {
    std::ostringstream out;
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1)
            out << ',';
        out << p.part(i);
    }
    return out.str();
}

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
        text.remove_prefix(1);
        text.remove_suffix(1);
        text = trim(text);
    }
    if (text.empty())
        return {};
    std::vector<long long> parts;
    for (std::string_view token : split(text, ','))
        parts.push_back(parse_integer(token, "a partition part"));
    try {
        return Partition(std::move(parts));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument("'" + std::string(text) + "': " + e.what());
    }
}

std::string format_frobenius(const FrobeniusSymbol& f) {
    return format_row(f.top) + " / " + format_row(f.bottom);
}

FrobeniusSymbol parse_frobenius(std::string_view text) {
    auto [top, bottom] = split_rows(text, "Frobenius symbol");
    try {
        return FrobeniusSymbol(parse_row(top), parse_row(bottom));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument("'" + std::string(text) + "': " + e.what());
    }
}

std::string format_colored(const ColoredFrobeniusSymbol& c) {
    auto format_colored_row = [](const std::vector<ColoredInteger>& row) {
        if (row.empty())
            return std::string("-");
        std::ostringstream out;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << ' ';
            out << row[i].value << ':' << row[i].color;
        }
        return out.str();
    };
    return format_colored_row(c.top) + " / " + format_colored_row(c.bottom);
}

ColoredFrobeniusSymbol parse_colored(std::string_view text, long long t) {
    auto parse_colored_row = [t](std::string_view row_text) {
        row_text = trim(row_text);
        std::vector<ColoredInteger> row;
        if (row_text.empty() || row_text == "-")
            return row;
        for (std::string_view token : split(row_text, ' ')) {
            token = trim(token);
            if (token.empty())
                continue;
            const std::size_t colon = token.find(':');
            if (colon == std::string_view::npos)
                bad_token(token, "a value:color entry");
            row.push_back(ColoredInteger{parse_integer(token.substr(0, colon), "a colored value"),
                                         parse_integer(token.substr(colon + 1), "a color"), t});
        }
        return row;
    };
    auto [top, bottom] = split_rows(text, "colored Frobenius symbol");
    try {
        return ColoredFrobeniusSymbol(parse_colored_row(top), parse_colored_row(bottom), t);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument("'" + std::string(text) + "': " + e.what());
    }
}

std::string format_array(const TwoRowedArray& a) {
    return format_row(a.top) + " / " + format_row(a.bottom);
}

TwoRowedArray parse_array(std::string_view text) {
    auto [top, bottom] = split_rows(text, "two-rowed array");
    try {
        return TwoRowedArray(parse_row(top), parse_row(bottom));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument("'" + std::string(text) + "': " + e.what());
    }
}

std::string render_young(const Partition& p, bool with_hooks) {
    if (p.empty())
        return "(empty)\n";
    std::ostringstream out;
    if (!with_hooks) {
        for (int i = 1; i <= p.length(); ++i) {
            for (long long j = 0; j < p.part(i); ++j)
                out << '#';
            out << '\n';
        }
        return out.str();
    }
    const Partition conj = conjugate(p);
    std::size_t width = 1;
    for (long long h : hook_multiset(p))
        width = std::max(width, std::to_string(h).size());
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            std::string cell = std::to_string((p.part(i) - i) + (conj.part(j) - j) + 1);
            if (j > 1)
                out << ' ';
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace corequot
