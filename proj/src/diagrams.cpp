#include "lecell/diagrams.hpp"

namespace lecell {

Diagram make_diagram(std::shared_ptr<const Poset> p, Mask shape, Mask plus) {
    if (!is_ideal(*p, shape)) throw DomainError("shape is not an order ideal");
    if (plus & ~shape) throw DomainError("filling outside the shape");
    return Diagram{std::move(p), shape, plus};
}

Subexpression to_subexpression(const Diagram& d, const std::vector<int>& ext) {
    Subexpression s;
    s.word = ideal_to_word(d.P(), d.shape, ext);
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) s.kept.push_back(!d.is_plus(*it));
    return s;
}

WeylElement subexpression_value(const RootSystemData& rs, const Subexpression& s) {
    WeylElement v(rs);
    for (std::size_t k = 0; k < s.word.size(); ++k)
        if (s.kept[k]) v.right_multiply_simple(s.word[k]);
    return v;
}

WeylElement value_along(const Diagram& d, const std::vector<int>& ext) {
    if (!is_linear_extension(d.P(), d.shape, ext)) throw DomainError("not a linear extension");
    WeylElement v(*d.P().rs);
    for (auto it = ext.rbegin(); it != ext.rend(); ++it)
        if (!d.is_plus(*it)) v.right_multiply_simple(d.P().boxes[*it].label);
    return v;
}

WeylElement value(const Diagram& d) {
    WeylElement v(*d.P().rs);
    for (int i = d.P().size() - 1; i >= 0; --i)
        if (d.is_zero(i)) v.right_multiply_simple(d.P().boxes[i].label);
    return v;
}

bool is_pds_along(const Diagram& d, const std::vector<int>& ext) {
    if (!is_linear_extension(d.P(), d.shape, ext)) throw DomainError("not a linear extension");
    WeylElement v(*d.P().rs);
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
        int s = d.P().boxes[*it].label;
        if (v.is_right_descent(s)) return false;
        if (!d.is_plus(*it)) v.right_multiply_simple(s);
    }
    return true;
}

bool is_pds(const Diagram& d) {
    WeylElement v(*d.P().rs);
    for (int i = d.P().size() - 1; i >= 0; --i) {
        if (!d.in_shape(i)) continue;
        int s = d.P().boxes[i].label;
        if (v.is_right_descent(s)) return false;
        if (!d.is_plus(i)) v.right_multiply_simple(s);
    }
    return true;
}

Diagram pds_filling(std::shared_ptr<const Poset> p, Mask shape, const WeylElement& target) {
    WeylElement v = target;
    Mask plus = 0;
    for (int i = 0; i < p->size(); ++i) {
        if (!((shape >> i) & 1)) continue;
        int s = p->boxes[i].label;
        if (v.is_right_descent(s))
            v.right_multiply_simple(s);
        else
            plus |= Mask{1} << i;
    }
    if (v != WeylElement::identity(*p->rs)) throw DomainError("element is not below the shape's element");
    return Diagram{std::move(p), shape, plus};
}

Diagram leify_direct(const Diagram& d) { return pds_filling(d.poset, d.shape, value(d)); }

namespace {
void le_dfs(const Diagram& proto, const std::vector<int>& order, std::size_t pos, const WeylElement& v, Mask plus,
            const std::function<void(const Diagram&)>& fn) {
    if (pos == order.size()) {
        Diagram d = proto;
        d.plus = plus;
        fn(d);
        return;
    }
    int i = order[pos];
    int s = proto.P().boxes[i].label;
    if (v.is_right_descent(s)) return;
    WeylElement w = v;
    w.right_multiply_simple(s);
    le_dfs(proto, order, pos + 1, w, plus, fn);
    le_dfs(proto, order, pos + 1, v, plus | (Mask{1} << i), fn);
}
}  // namespace

void for_each_le_diagram(const std::shared_ptr<const Poset>& p, Mask shape,
                         const std::function<void(const Diagram&)>& fn) {
    std::vector<int> order;
    for (int i = p->size() - 1; i >= 0; --i)
        if ((shape >> i) & 1) order.push_back(i);
    Diagram proto{p, shape, 0};
    le_dfs(proto, order, 0, WeylElement::identity(*p->rs), 0, fn);
}

std::vector<Diagram> le_diagrams(const std::shared_ptr<const Poset>& p, Mask shape) {
    std::vector<Diagram> out;
    for_each_le_diagram(p, shape, [&](const Diagram& d) { out.push_back(d); });
    return out;
}

}  // namespace lecell
