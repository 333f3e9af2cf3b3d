#include "tieroc/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "tieroc/error.hpp"

namespace tieroc::csv {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_real(const std::string& field) {
    if (field.empty()) {
        return std::nullopt;
    }
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) {
        return std::nullopt;
    }
    return v;
}

std::optional<long long> parse_integer(const std::string& field) {
    long long v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && field.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        return std::nullopt;
    }
    return v;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw IngestError("line " + std::to_string(line_no) + ": " + what);
}

// Calls on_record(fields, line_no) for each data line.
template <typename F>
void for_each_record(std::istream& in, std::size_t expected_fields, F&& on_record) {
    std::string line;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
            line.erase(0, 3);
        }
        if (trim(line).empty()) {
            continue;
        }
        auto fields = split_line(line);
        if (first_content) {
            first_content = false;
            if (!fields.empty() && !parse_real(fields.front())) {
                continue;  // header
            }
        }
        if (fields.size() != expected_fields) {
            fail(line_no, "expected " + std::to_string(expected_fields) + " fields, got " +
                              std::to_string(fields.size()));
        }
        on_record(fields, line_no);
    }
}

}  // namespace

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

Dataset read_rows(std::istream& in) {
    std::vector<std::pair<double, double>> records;
    for_each_record(in, 2, [&](const std::vector<std::string>& f, std::size_t line_no) {
        const auto score = parse_real(f[0]);
        if (!score) {
            fail(line_no, "score '" + f[0] + "' is not a number");
        }
        const auto label = parse_real(f[1]);
        if (!label || (*label != 0.0 && *label != 1.0)) {
            fail(line_no, "label '" + f[1] + "' is not 0 or 1");
        }
        if (!std::isfinite(*score)) {
            fail(line_no, "score '" + f[0] + "' is not finite");
        }
        records.emplace_back(*score, *label);
    });
    return load_rows(records);
}

Dataset read_counts(std::istream& in) {
    std::vector<CountRecord> records;
    for_each_record(in, 3, [&](const std::vector<std::string>& f, std::size_t line_no) {
        const auto score = parse_real(f[0]);
        if (!score) {
            fail(line_no, "value '" + f[0] + "' is not a number");
        }
        const auto neg = parse_integer(f[1]);
        const auto pos = parse_integer(f[2]);
        if (!neg || !pos) {
            fail(line_no, "counts must be integers");
        }
        if (*neg < 0 || *pos < 0) {
            fail(line_no, "negative count");
        }
        records.push_back({*score, static_cast<Count>(*neg), static_cast<Count>(*pos)});
    });
    return load_counts(records);
}

namespace {

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IngestError("cannot open " + path.string());
    }
    return in;
}

}  // namespace

Dataset read_rows_file(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_rows(in);
}

Dataset read_counts_file(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_counts(in);
}

}  // namespace tieroc::csv
