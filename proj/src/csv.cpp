#include "collabmkt/csv.hpp"

#include "collabmkt/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace collabmkt::csv {

std::vector<Row> parse(std::string_view text, std::string_view source) {
    std::vector<Row> rows;
    Row row;
    std::string field;
    enum class St { start, unquoted, quoted, closed };
    St st = St::start;
    bool row_started = false; // any byte consumed on the current line
    std::size_t line = 1;
    std::size_t quote_line = 0;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        st = St::start;
    };
    auto end_row = [&] {
        if (row_started || !row.empty()) {
            end_field();
            rows.push_back(std::move(row));
            row.clear();
        }
        row_started = false;
        st = St::start;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (st == St::quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    st = St::closed;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (st == St::start) {
                st = St::quoted;
                quote_line = line;
                row_started = true;
            } else {
                field += c; // stray quote inside an unquoted field: literal
            }
            break;
        case ',':
            end_field();
            row_started = true;
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
            end_row();
            ++line;
            break;
        case '\n':
            end_row();
            ++line;
            break;
        default:
            field += c;
            if (st == St::start) st = St::unquoted;
            row_started = true;
            break;
        }
    }
    if (st == St::quoted) {
        throw DataError(std::string(source) + ":" + std::to_string(quote_line) +
                        ": unterminated quoted field");
    }
    end_row();
    return rows;
}

std::vector<Row> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

std::string escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out << ',';
        out << escape(row[i]);
    }
    out << '\n';
}

std::string to_string(const std::vector<Row>& rows) {
    std::ostringstream out;
    for (const Row& row : rows) write_row(out, row);
    return out.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw DataError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[512];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
}

} // namespace collabmkt::csv
