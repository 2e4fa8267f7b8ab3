#include "hqdeform/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hqdeform {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out += c;
    return out;
}

}  // namespace

Group::Group(std::vector<std::string> labels, std::vector<std::vector<GroupIndex>> table,
             std::vector<std::string> generator_labels)
    : labels_(std::move(labels)), table_(std::move(table)), generator_labels_(std::move(generator_labels)) {
    const std::size_t n = labels_.size();
    if (n == 0 || table_.size() != n) throw Error("group table has wrong size");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error("group table has wrong size");
        std::set<GroupIndex> seen(row.begin(), row.end());
        if (seen.size() != n || *seen.rbegin() >= n) throw Error("group table row is not a permutation");
    }
    bool found = false;
    for (GroupIndex e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (GroupIndex a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw Error("group table has no identity");
    for (GroupIndex a = 0; a < n; ++a)
        for (GroupIndex b = 0; b < n; ++b)
            for (GroupIndex c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw Error("group table is not associative");
    inverse_.assign(n, 0);
    for (GroupIndex a = 0; a < n; ++a)
        for (GroupIndex b = 0; b < n; ++b)
            if (table_[a][b] == identity_) inverse_[a] = b;

    for (const auto& gl : generator_labels_) {
        auto it = std::find(labels_.begin(), labels_.end(), gl);
        if (it == labels_.end()) throw Error("unknown generator label: " + gl);
        generators_.push_back(static_cast<GroupIndex>(it - labels_.begin()));
    }
    words_.assign(n, {});
    std::vector<bool> reached(n, false);
    reached[identity_] = true;
    std::deque<GroupIndex> queue{identity_};
    while (!queue.empty()) {
        GroupIndex a = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            GroupIndex b = table_[a][generators_[k]];
            if (reached[b]) continue;
            reached[b] = true;
            words_[b] = words_[a];
            words_[b].push_back(k);
            queue.push_back(b);
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
        throw Error("generators do not generate the group");
}

GroupIndex Group::pow(GroupIndex a, std::int64_t e) const {
    GroupIndex base = e < 0 ? inv(a) : a;
    GroupIndex acc = identity_;
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) acc = mul(acc, base);
    return acc;
}

GroupIndex Group::parse_word(const std::string& word) const {
    std::string w = strip(word);
    if (w.empty()) throw Error("empty group word");
    auto direct = std::find(labels_.begin(), labels_.end(), w);
    if (direct != labels_.end()) return static_cast<GroupIndex>(direct - labels_.begin());
    GroupIndex acc = identity_;
    std::size_t pos = 0;
    while (pos <= w.size()) {
        auto star = w.find('*', pos);
        std::string factor = w.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        if (factor.empty()) throw Error("bad group word: " + word);
        std::int64_t exponent = 1;
        auto caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        if (caret != std::string::npos) {
            try {
                std::size_t used = 0;
                exponent = std::stoll(factor.substr(caret + 1), &used);
                if (used != factor.size() - caret - 1) throw Error("bad exponent");
            } catch (const std::exception&) {
                throw Error("bad group word: " + word);
            }
        }
        GroupIndex base;
        if (name == "e" || name == "1") {
            base = identity_;
        } else {
            auto it = std::find(labels_.begin(), labels_.end(), name);
            if (it == labels_.end()) throw Error("unknown group element '" + name + "' in word: " + word);
            base = static_cast<GroupIndex>(it - labels_.begin());
        }
        acc = mul(acc, pow(base, exponent));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return acc;
}

std::vector<std::vector<GroupIndex>> Group::conjugacy_classes() const {
    std::vector<std::vector<GroupIndex>> classes;
    std::vector<bool> done(order(), false);
    for (GroupIndex x = 0; x < order(); ++x) {
        if (done[x]) continue;
        std::set<GroupIndex> cls;
        for (GroupIndex g = 0; g < order(); ++g) cls.insert(conj(g, x));
        for (auto c : cls) done[c] = true;
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

bool Group::is_union_of_classes(const std::vector<GroupIndex>& set) const {
    std::set<GroupIndex> s(set.begin(), set.end());
    for (auto x : s)
        for (GroupIndex g = 0; g < order(); ++g)
            if (!s.count(conj(g, x))) return false;
    return true;
}

Group make_cyclic(std::size_t r) {
    if (r == 0) throw Error("cyclic group of order 0");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
    std::vector<std::vector<GroupIndex>> table(r, std::vector<GroupIndex>(r));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) table[a][b] = (a + b) % r;
    return Group(labels, table, {r == 1 ? "e" : "g"});
}

Group make_dihedral(std::size_t u) {
    if (u < 2) throw Error("dihedral group needs u >= 2");
    auto tpow = [](std::size_t i) { return i == 0 ? std::string() : i == 1 ? std::string("t") : "t^" + std::to_string(i); };
    std::vector<std::string> labels(2 * u);
    for (std::size_t i = 0; i < u; ++i) {
        labels[i] = i == 0 ? "e" : tpow(i);
        labels[i + u] = i == 0 ? "s" : tpow(i) + "*s";
    }
    // (t^a s^b)(t^c s^d) = t^(a + (-1)^b c) s^(b+d)
    std::vector<std::vector<GroupIndex>> table(2 * u, std::vector<GroupIndex>(2 * u));
    for (std::size_t x = 0; x < 2 * u; ++x)
        for (std::size_t y = 0; y < 2 * u; ++y) {
            std::size_t a = x % u, b = x / u, c = y % u, d = y / u;
            std::size_t i = b == 0 ? (a + c) % u : (a + u - c) % u;
            table[x][y] = i + u * ((b + d) % 2);
        }
    return Group(labels, table, {"s", "t"});
}

Cocycle::Cocycle(std::size_t order, FieldSpec field)
    : values_(order, std::vector<Scalar>(order, Scalar::one(field))) {}

Cocycle::Cocycle(std::vector<std::vector<Scalar>> values) : values_(std::move(values)) {
    for (const auto& row : values_)
        if (row.size() != values_.size()) throw Error("cocycle table must be square");
}

Cocycle cocycle_xi(std::size_t r, const Scalar& xi) {
    if (xi.is_zero()) throw Error("cocycle parameter must be nonzero");
    std::vector<std::vector<Scalar>> v(r, std::vector<Scalar>(r, Scalar::one(xi.field())));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            if (a + b >= r) v[a][b] = xi;
    return Cocycle(std::move(v));
}

std::optional<CocycleWitness> validate_cocycle(const Group& grp, const Cocycle& f) {
    const std::size_t n = grp.order();
    if (f.order() != n) return CocycleWitness{0, 0, 0, "cocycle table size differs from group order"};
    const GroupIndex e = grp.identity();
    for (GroupIndex g = 0; g < n; ++g) {
        for (GroupIndex h = 0; h < n; ++h)
            if (f(g, h).is_zero()) return CocycleWitness{g, h, e, "value is zero"};
        if (!f(e, g).is_one() || !f(g, e).is_one()) return CocycleWitness{g, e, e, "not normalized"};
    }
    for (GroupIndex g = 0; g < n; ++g)
        for (GroupIndex h = 0; h < n; ++h)
            for (GroupIndex k = 0; k < n; ++k)
                if (!(f(g, h) * f(grp.mul(g, h), k) == f(h, k) * f(g, grp.mul(h, k))))
                    return CocycleWitness{g, h, k, "cocycle identity fails"};
    return std::nullopt;
}

Character trivial_character(const Group& g, FieldSpec field) { return Character(g.order(), Scalar::one(field)); }

Character character_from_generators(const Group& grp, const std::map<std::string, Scalar>& values, FieldSpec field) {
    std::vector<Scalar> gen_values;
    for (const auto& gl : grp.generator_labels()) {
        auto it = values.find(gl);
        gen_values.push_back(it == values.end() ? Scalar::one(field) : it->second);
    }
    for (const auto& [k, v] : values)
        if (std::find(grp.generator_labels().begin(), grp.generator_labels().end(), k) == grp.generator_labels().end())
            throw Error("character given on non-generator: " + k);
    Character c(grp.order(), Scalar::one(field));
    for (GroupIndex x = 0; x < grp.order(); ++x)
        for (auto k : grp.generator_words()[x]) c[x] *= gen_values[k];
    if (auto d = character_defect(grp, c))
        throw Error("character values do not define a homomorphism (at " + grp.label(d->first) + ", " +
                    grp.label(d->second) + ")");
    return c;
}

std::optional<std::pair<GroupIndex, GroupIndex>> character_defect(const Group& grp, const Character& c) {
    if (c.size() != grp.order()) return std::make_pair(grp.identity(), grp.identity());
    for (GroupIndex g = 0; g < grp.order(); ++g)
        for (GroupIndex h = 0; h < grp.order(); ++h)
            if (!(c[grp.mul(g, h)] == c[g] * c[h])) return std::make_pair(g, h);
    return std::nullopt;
}

}  // namespace hqdeform
