#include "lecell/io.hpp"

#include <sstream>

namespace lecell {

json poset_to_json(const Poset& p) {
    json boxes = json::array();
    for (const auto& b : p.boxes) boxes.push_back({{"row", b.row}, {"col", b.col}, {"label", b.label}});
    json covers = json::array();
    for (auto [lo, hi] : p.covers) covers.push_back({lo, hi});
    return {{"type", type_name(p.type)}, {"n", p.n}, {"j", p.j}, {"boxes", boxes}, {"covers", covers}};
}

namespace {
// boxes of one grid row, left to right
std::vector<int> row_boxes(const Poset& p, int row) {
    std::vector<int> out;
    for (int c = p.min_col; c <= p.max_col; ++c) {
        int i = p.index_at(row, c);
        if (i >= 0) out.push_back(i);
    }
    return out;
}

Diagram from_rows(const std::shared_ptr<const Poset>& p, const std::vector<std::string>& rows) {
    const int nrows = p->max_row - p->min_row + 1;
    if (static_cast<int>(rows.size()) != nrows)
        throw DomainError("expected " + std::to_string(nrows) + " rows, got " + std::to_string(rows.size()));
    Mask shape = 0, plus = 0;
    for (int r = 0; r < nrows; ++r) {
        auto boxes = row_boxes(*p, p->min_row + r);
        const std::string& s = rows[r];
        if (s.size() > boxes.size())
            throw DomainError("row " + std::to_string(p->min_row + r) + " has more entries than boxes");
        for (std::size_t k = 0; k < s.size(); ++k) {
            const Box& b = p->boxes[boxes[k]];
            if (s[k] != '0' && s[k] != '+')
                throw DomainError("bad symbol '" + std::string(1, s[k]) + "' at box (" + std::to_string(b.row) +
                                  "," + std::to_string(b.col) + ")");
            shape |= Mask{1} << boxes[k];
            if (s[k] == '+') plus |= Mask{1} << boxes[k];
        }
    }
    for (int i = 0; i < p->size(); ++i)
        if (((shape >> i) & 1) && (p->below[i] & ~shape))
            throw DomainError("box (" + std::to_string(p->boxes[i].row) + "," + std::to_string(p->boxes[i].col) +
                              ") is filled but a box below or left of it is missing");
    return make_diagram(p, shape, plus);
}

std::vector<std::string> to_rows(const Diagram& d) {
    const Poset& p = d.P();
    std::vector<std::string> rows;
    for (int r = p.min_row; r <= p.max_row; ++r) {
        std::string s;
        for (int i : row_boxes(p, r))
            if (d.in_shape(i)) s += d.is_plus(i) ? '+' : '0';
        rows.push_back(s);
    }
    return rows;
}
}  // namespace

Diagram parse_inline_diagram(const std::shared_ptr<const Poset>& p, const std::string& text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : text) {
        if (ch == '/') {
            rows.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    rows.push_back(cur);
    return from_rows(p, rows);
}

std::string to_inline(const Diagram& d) {
    std::string out;
    auto rows = to_rows(d);
    for (std::size_t r = 0; r < rows.size(); ++r) out += (r ? "/" : "") + rows[r];
    return out;
}

json diagram_to_json(const Diagram& d) {
    auto rows = to_rows(d);
    json lens = json::array();
    for (const auto& r : rows) lens.push_back(r.size());
    return {{"poset", {{"type", type_name(d.P().type)}, {"n", d.P().n}, {"j", d.P().j}}},
            {"ideal_rows", lens},
            {"filling", rows}};
}

Diagram diagram_from_json(const json& doc) {
    try {
        const auto& pj = doc.at("poset");
        auto p = build_poset(parse_type(pj.at("type").get<std::string>()), pj.at("n").get<int>(),
                             pj.at("j").get<int>());
        auto rows = doc.at("filling").get<std::vector<std::string>>();
        if (doc.contains("ideal_rows")) {
            auto lens = doc.at("ideal_rows").get<std::vector<int>>();
            if (lens.size() != rows.size()) throw DomainError("ideal_rows and filling disagree in length");
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (static_cast<int>(rows[r].size()) != lens[r])
                    throw DomainError("row " + std::to_string(r) + ": ideal_rows says " + std::to_string(lens[r]) +
                                      " boxes, filling has " + std::to_string(rows[r].size()));
        }
        return from_rows(p, rows);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed diagram JSON: ") + e.what());
    }
}

std::string render_ascii(const Diagram& d, bool french) {
    const Poset& p = d.P();
    std::vector<std::string> lines;
    for (int r = p.min_row; r <= p.max_row; ++r) {
        std::string s;
        for (int c = p.min_col; c <= p.max_col; ++c) {
            int i = p.index_at(r, c);
            char ch = i < 0 ? ' ' : !d.in_shape(i) ? '.' : d.is_plus(i) ? '+' : '0';
            s += ch;
            if (c < p.max_col) s += ' ';
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        lines.push_back(s);
    }
    if (french) std::reverse(lines.begin(), lines.end());
    std::string out;
    for (auto& l : lines) out += l + "\n";
    return out;
}

std::string word_to_string(const std::vector<int>& word) {
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << word[k];
    return os.str();
}

}  // namespace lecell
