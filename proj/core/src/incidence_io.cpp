#include "qsd/incidence_io.hpp"

#include <fstream>
#include <sstream>

namespace qsd {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& what) {
    throw IncidenceParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                              ": " + what);
}

}  // namespace

IncidenceStructure parse_incidence(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    // header: first non-comment, non-blank line
    std::size_t v = 0, b = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hs(line);
        long long hv = -1, hb = -1;
        if (!(hs >> hv >> hb) || hv < 0 || hb < 0) fail(lineno, 1, "expected header \"v b\"");
        std::string trailing;
        if (hs >> trailing) fail(lineno, 1, "unexpected trailing header field");
        v = std::size_t(hv);
        b = std::size_t(hb);
        have_header = true;
        break;
    }
    if (!have_header) fail(lineno + 1, 1, "missing header");

    std::vector<std::uint8_t> m(v * b, 0);
    std::size_t row = 0;
    while (row < v && std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != b)
            fail(lineno, line.size() + 1,
                 "row has " + std::to_string(line.size()) + " entries, expected " +
                     std::to_string(b));
        for (std::size_t j = 0; j < b; j++) {
            if (line[j] == '1')
                m[row * b + j] = 1;
            else if (line[j] != '0')
                fail(lineno, j + 1, std::string("illegal character '") + line[j] + "'");
        }
        row++;
    }
    if (row != v)
        fail(lineno + 1, 1,
             "expected " + std::to_string(v) + " rows, found " + std::to_string(row));
    // trailing content other than comments/blanks is an error
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fail(lineno, 1, "unexpected content after matrix");
    }
    return IncidenceStructure(v, b, std::move(m));
}

IncidenceStructure load_incidence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IncidenceParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_incidence(ss.str());
}

std::string serialize_incidence(const IncidenceStructure& d) {
    std::ostringstream out;
    out << d.v() << " " << d.b() << "\n";
    for (std::size_t i = 0; i < d.v(); i++) {
        for (std::size_t j = 0; j < d.b(); j++) out << (d.incident(i, j) ? '1' : '0');
        out << "\n";
    }
    return out.str();
}

void save_incidence(const std::string& path, const IncidenceStructure& d,
                    const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw IncidenceParseError("cannot open " + path + " for writing");
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string cl;
        while (std::getline(cs, cl)) out << "# " << cl << "\n";
    }
    out << serialize_incidence(d);
}

}  // namespace qsd
