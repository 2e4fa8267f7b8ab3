#include "hqdeform/cohomology.hpp"

#include <numeric>
#include <random>
#include <set>

#include "hqdeform/deformation.hpp"
#include "hqdeform/text.hpp"

namespace hqdeform {

namespace {

CrossedElement element(const ContextPtr& ctx, const ABasis& b, const Scalar& c) {
    return CrossedElement::term(ctx, Poly::monomial(b.m, c), b.g);
}

std::string input_text(const ContextPtr& ctx, const Word& w, const Wedge& v) {
    std::string out;
    for (auto g : w) out += (out.empty() ? "" : "|") + ctx->group().label(g);
    for (auto i : v) out += (out.empty() ? "" : "|") + std::string("v") + std::to_string(i + 1);
    return "(" + out + ")";
}

std::vector<XElement> degree_basis(const Resolution& res, std::size_t degree) {
    std::vector<XElement> out;
    for (std::size_t r = 0; r <= std::min(degree, res.context()->nvars()); ++r)
        for (auto& x : res.basis(r, degree - r)) out.push_back(std::move(x));
    return out;
}

const XKey& only_key(const XElement& x) { return x.terms().begin()->first; }

std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out{Monomial(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Monomial> next;
        for (const auto& m : out)
            for (std::uint32_t k = 0; k + total_degree(m) <= d; ++k) {
                Monomial t = m;
                t[i] = k;
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

// ---------------------------------------------------------------- cochains

CrossedElement Cochain::at(const Word& w, const Wedge& v) const {
    auto it = values.find({w, v});
    return it == values.end() ? CrossedElement::zero(ctx) : it->second;
}

void Cochain::set(const Word& w, const Wedge& v, const CrossedElement& a) {
    if (a.is_zero()) values.erase({w, v});
    else values.insert_or_assign({w, v}, a);
}

bool Cochain::is_zero() const { return values.empty(); }

bool operator==(const Cochain& a, const Cochain& b) { return a.degree == b.degree && a.values == b.values; }

CrossedElement evaluate(const Cochain& phi, const XElement& x) {
    const auto& ctx = phi.ctx;
    CrossedElement out(ctx);
    for (const auto& [k, c] : x.terms()) {
        const CrossedElement v = phi.at(k.word, k.wedge);
        if (v.is_zero()) continue;
        out += element(ctx, k.left, c) * v * element(ctx, k.right, Scalar::one(ctx->field()));
    }
    return out;
}

Cochain total_differential(const Resolution& res, const Cochain& phi) {
    Cochain out{phi.ctx, phi.degree + 1, {}};
    for (const auto& x : degree_basis(res, phi.degree + 1)) {
        const XKey& k = only_key(x);
        out.set(k.word, k.wedge, evaluate(phi, res.d(x)));
    }
    return out;
}

Cochain Cochain1::to_cochain(const ContextPtr& ctx) const {
    Cochain c{ctx, 1, {}};
    for (const auto& [g, a] : phi0) {
        if (g == ctx->group().identity()) throw Error("phi0 is not defined at the identity");
        c.set({g}, {}, a);
    }
    for (const auto& [i, a] : phi1) c.set({}, {i}, a);
    return c;
}

Cochain2 Cochain2::from_cochain(const Cochain& c) {
    if (c.degree != 2) throw Error("expected a 2-cochain");
    Cochain2 out;
    for (const auto& [key, a] : c.values) {
        const auto& [w, v] = key;
        if (w.size() == 2) out.on_gg.emplace(std::make_pair(w[0], w[1]), a);
        else if (w.size() == 1) out.on_gv.emplace(std::make_pair(w[0], v[0]), a);
        else out.on_vv.emplace(std::make_pair(v[0], v[1]), a);
    }
    return out;
}

Cochain Cochain2::to_cochain(const ContextPtr& ctx) const {
    Cochain c{ctx, 2, {}};
    for (const auto& [k, a] : on_gg) c.set({k.first, k.second}, {}, a);
    for (const auto& [k, a] : on_gv) c.set({k.first}, {k.second}, a);
    for (const auto& [k, a] : on_vv) {
        if (k.first >= k.second) throw Error("on_vv keys need i < j");
        c.set({}, {k.first, k.second}, a);
    }
    return c;
}

Cochain2 cochain_differential(const ContextPtr& ctx, const Cochain1& c) {
    return Cochain2::from_cochain(total_differential(Resolution(ctx), c.to_cochain(ctx)));
}

// ---------------------------------------------------------------- theta bar

Cochain theta_bar(const Resolution& res, const Bilinear& phi) {
    const auto& ctx = res.context();
    const FieldSpec f = ctx->field();
    Cochain out{ctx, 2, {}};
    for (const auto& x : degree_basis(res, 2)) {
        CrossedElement v(ctx);
        const BarElement th = res.theta_closed(x);
        for (const auto& [k, c] : th.terms())
            v += element(ctx, k[0], c) * phi(element(ctx, k[1], Scalar::one(f)), element(ctx, k[2], Scalar::one(f))) *
                 element(ctx, k[3], Scalar::one(f));
        const XKey& key = only_key(x);
        out.set(key.word, key.wedge, v);
    }
    return out;
}

Cochain2 theta_bar_of_infinitesimal(const HqStructure& st) {
    Resolution res(st.ctx());
    return Cochain2::from_cochain(
        theta_bar(res, [&](const CrossedElement& a, const CrossedElement& b) { return infinitesimal(st, a, b); }));
}

CocycleOutcome cocycle_check(const HqStructure& st, const Bilinear& phi, std::size_t samples, std::uint64_t seed) {
    const auto& ctx = st.ctx();
    Resolution res(ctx);
    const Cochain d = total_differential(res, theta_bar(res, phi));
    if (!d.is_zero()) {
        const auto& [key, v] = *d.values.begin();
        return {false, "d(theta_bar) at " + input_text(ctx, key.first, key.second) + " = " + format_element(v)};
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const auto a = random_element(ctx, rng, 2, 2), b = random_element(ctx, rng, 2, 2), c = random_element(ctx, rng, 2, 2);
        const CrossedElement lhs = a * phi(b, c) - phi(a * b, c) + phi(a, b * c) - phi(a, b) * c;
        if (!lhs.is_zero())
            return {false, "bar identity fails at a = " + format_element(a) + ", b = " + format_element(b) +
                               ", c = " + format_element(c)};
    }
    return {};
}

CocycleOutcome cocycle_check(const HqStructure& st) {
    return cocycle_check(st, [&](const CrossedElement& a, const CrossedElement& b) { return infinitesimal(st, a, b); });
}

// ---------------------------------------------------------------- coboundary system

CoboundaryOutcome coboundary_solve(const HqStructure& st, const Cochain& target, std::uint32_t bound) {
    const auto& ctx = st.ctx();
    const FieldSpec f = ctx->field();
    const Group& grp = ctx->group();
    Resolution res(ctx);

    struct Column {
        Word word;
        Wedge wedge;
        ABasis basis;
    };
    std::vector<Column> cols;
    std::map<std::pair<Word, Wedge>, std::vector<std::size_t>> slot_cols;
    std::vector<std::pair<Word, Wedge>> slots;
    for (GroupIndex g = 0; g < grp.order(); ++g)
        if (g != grp.identity()) slots.push_back({{g}, {}});
    for (std::size_t i = 0; i < ctx->nvars(); ++i) slots.push_back({{}, {i}});
    const auto monos = monomials_up_to(ctx->nvars(), bound);
    for (const auto& slot : slots)
        for (GroupIndex k = 0; k < grp.order(); ++k)
            for (const auto& m : monos) {
                slot_cols[slot].push_back(cols.size());
                cols.push_back(Column{slot.first, slot.second, ABasis{m, k}});
            }

    // Rows: (input, output basis element of A).
    using RowKey = std::pair<std::pair<Word, Wedge>, ABasis>;
    std::map<RowKey, std::map<std::size_t, Scalar>> rows;
    std::map<RowKey, Scalar> rhs;
    for (const auto& x : degree_basis(res, 2)) {
        const XKey& xk = only_key(x);
        const auto input = std::make_pair(xk.word, xk.wedge);
        const XElement dx = res.d(x);
        for (const auto& [k, c] : dx.terms()) {
            const CrossedElement left = element(ctx, k.left, c);
            const CrossedElement right = element(ctx, k.right, Scalar::one(f));
            for (auto col : slot_cols.at({k.word, k.wedge})) {
                const CrossedElement img = left * element(ctx, cols[col].basis, Scalar::one(f)) * right;
                for (const auto& [g, p] : img.components())
                    for (const auto& [m, v] : p.terms()) {
                        auto& row = rows[{input, ABasis{m, g}}];
                        auto [it, fresh] = row.try_emplace(col, v);
                        if (!fresh) {
                            it->second += v;
                            if (it->second.is_zero()) row.erase(it);
                        }
                    }
            }
        }
        const CrossedElement value = target.at(xk.word, xk.wedge);
        for (const auto& [g, p] : value.components())
            for (const auto& [m, v] : p.terms()) {
                rhs[{input, ABasis{m, g}}] = v;
                rows[{input, ABasis{m, g}}];
            }
    }

    std::vector<RowKey> row_keys;
    for (const auto& [k, r] : rows) row_keys.push_back(k);
    CoboundaryOutcome out;
    out.unknowns = cols.size();
    out.equations = row_keys.size();
    auto rhs_of = [&](const RowKey& k) {
        auto it = rhs.find(k);
        return it == rhs.end() ? Scalar::zero(f) : it->second;
    };
    auto describe = [&](const RowKey& k) {
        return "coefficient of " + format_element(element(ctx, k.second, Scalar::one(f))) + " at input " +
               input_text(ctx, k.first.first, k.first.second);
    };

    UnionFind uf(cols.size());
    for (const auto& [k, r] : rows)
        for (const auto& [c, v] : r) uf.join(c, r.begin()->first);
    std::map<std::size_t, std::vector<std::size_t>> block_rows, block_cols;
    for (std::size_t c = 0; c < cols.size(); ++c) block_cols[uf.find(c)].push_back(c);

    auto finish_infeasible = [&](const std::map<std::size_t, Scalar>& y, const RowKey& first) {
        out.feasible = false;
        out.certificate.assign(row_keys.size(), Scalar::zero(f));
        for (const auto& [i, v] : y) out.certificate[i] = v;
        // Re-check y^T A = 0 and y^T b != 0 on the full system.
        std::map<std::size_t, Scalar> acc;
        Scalar dot = Scalar::zero(f);
        for (const auto& [i, v] : y) {
            for (const auto& [c, a] : rows.at(row_keys[i])) {
                auto [it, fresh] = acc.try_emplace(c, v * a);
                if (!fresh) it->second += v * a;
            }
            dot += v * rhs_of(row_keys[i]);
        }
        bool zero = true;
        for (const auto& [c, a] : acc) zero = zero && a.is_zero();
        out.certificate_verified = zero && !dot.is_zero();
        out.refuted_block = describe(first);
        return out;
    };

    std::set<std::size_t> roots;
    for (const auto& [k, r] : rows)
        if (!r.empty()) roots.insert(uf.find(r.begin()->first));
    out.blocks = roots.size();
    for (std::size_t i = 0; i < row_keys.size(); ++i) {
        const auto& r = rows.at(row_keys[i]);
        if (r.empty()) {
            if (!rhs_of(row_keys[i]).is_zero()) return finish_infeasible({{i, Scalar::one(f)}}, row_keys[i]);
            continue;
        }
        block_rows[uf.find(r.begin()->first)].push_back(i);
    }

    Cochain1 witness;
    for (const auto& [root, brows] : block_rows) {
        const auto& bcols = block_cols.at(root);
        std::map<std::size_t, std::size_t> local;
        for (std::size_t j = 0; j < bcols.size(); ++j) local[bcols[j]] = j;
        Matrix a(brows.size(), bcols.size(), f);
        std::vector<Scalar> b(brows.size(), Scalar::zero(f));
        for (std::size_t i = 0; i < brows.size(); ++i) {
            for (const auto& [c, v] : rows.at(row_keys[brows[i]])) a.at(i, local.at(c)) = v;
            b[i] = rhs_of(row_keys[brows[i]]);
        }
        bool homogeneous = true;
        for (const auto& v : b) homogeneous = homogeneous && v.is_zero();
        if (homogeneous) continue;
        const SolveOutcome sol = solve(a, b);
        if (const auto* cert = std::get_if<Certificate>(&sol)) {
            std::map<std::size_t, Scalar> y;
            std::optional<std::size_t> first;
            for (std::size_t i = 0; i < brows.size(); ++i)
                if (!cert->y[i].is_zero()) {
                    y.emplace(brows[i], cert->y[i]);
                    if (!first) first = brows[i];
                }
            return finish_infeasible(y, row_keys[*first]);
        }
        const auto& x = std::get<Solution>(sol).x;
        for (std::size_t j = 0; j < bcols.size(); ++j) {
            if (x[j].is_zero()) continue;
            const Column& col = cols[bcols[j]];
            CrossedElement term = element(ctx, col.basis, x[j]);
            if (col.word.empty()) witness.phi1.try_emplace(col.wedge[0], ctx).first->second += term;
            else witness.phi0.try_emplace(col.word[0], ctx).first->second += term;
        }
    }
    out.feasible = true;
    out.witness = std::move(witness);
    return out;
}

CoboundaryOutcome coboundary_solve(const HqStructure& st, std::uint32_t bound) {
    Resolution res(st.ctx());
    return coboundary_solve(
        st, theta_bar(res, [&](const CrossedElement& a, const CrossedElement& b) { return infinitesimal(st, a, b); }),
        bound);
}

// ---------------------------------------------------------------- direct argument

ObstructionOutcome direct_obstruction_check(const HqStructure& st) {
    const auto& ctx = st.ctx();
    const Group& grp = ctx->group();
    const FieldSpec f = ctx->field();
    const std::size_t x1 = st.x(1), x2 = st.x(2);
    ObstructionOutcome out;

    for (const auto& d1 : st.data(1))
        for (const auto& d2 : st.data(2)) {
            const GroupIndex g = grp.mul(d1.g, d2.g);
            // alpha^-1(P1 w_g1j) ^{g1j}P2 f(g1j, g2h) w_g, read off as a polynomial.
            const CrossedElement lhs = st.alpha_inv(CrossedElement::term(ctx, d1.p, d1.g)) *
                                       CrossedElement::term(ctx, d2.p, d2.g);
            auto [it, fresh] = out.rhs.try_emplace(g, f, ctx->nvars());
            it->second += lhs.component(g);
        }
    for (auto it = out.rhs.begin(); it != out.rhs.end();)
        it = it->second.is_zero() ? out.rhs.erase(it) : std::next(it);

    if (out.rhs.empty()) {
        out.reason = "not-applicable: the right-hand side vanishes";
        return out;
    }
    for (const auto& [g, p] : out.rhs)
        for (const auto& [m, c] : p.terms())
            if (m[x1] > 0 || m[x2] > 0) {
                out.reason = std::string("not-applicable: RHS support touches ") + (m[x1] > 0 ? "x" + std::to_string(x1 + 1)
                                                                                               : "x" + std::to_string(x2 + 1)) +
                             " at " + grp.label(g);
                return out;
            }
    const Scalar q = st.q();
    for (const auto& [g, p] : out.rhs) {
        const LinearEndo& m = ctx->rho()(g);
        for (std::size_t i = 0; i < ctx->nvars(); ++i) {
            if (i != x1 && !m.at(i, x1).is_zero()) {
                out.reason = "not-applicable: x" + std::to_string(x1 + 1) + " is not an eigenvector of " + grp.label(g);
                return out;
            }
            if (i != x2 && !m.at(i, x2).is_zero()) {
                out.reason = "not-applicable: x" + std::to_string(x2 + 1) + " is not an eigenvector of " + grp.label(g);
                return out;
            }
        }
        if (!(m.at(x1, x1) == q) || !(m.at(x2, x2) == q.inverse())) {
            out.reason = "not-applicable: eigenvalues at " + grp.label(g) + " are " + m.at(x1, x1).to_string() + ", " +
                         m.at(x2, x2).to_string() + " instead of q, 1/q";
            return out;
        }
    }
    out.applies = true;
    out.reason = "applies: every monomial of [phi1(x2), x1] + [x2, phi1(x1)] at these components is divisible by x" +
                 std::to_string(x1 + 1) + " or x" + std::to_string(x2 + 1) + ", the right-hand side is not";
    return out;
}

// ---------------------------------------------------------------- verdict

std::string NontrivialityVerdict::conclusion() const {
    if (!cocycle.ok) return "inconclusive";
    if (coboundary.feasible) return "trivial";
    if (obstruction.applies) return "proof";
    return "evidence";
}

nlohmann::json NontrivialityVerdict::to_json(const ContextPtr& ctx) const {
    nlohmann::json j;
    j["cocycle"] = {{"ok", cocycle.ok}, {"witness", cocycle.witness}};
    nlohmann::json cb{{"degree_bound", bound},
                      {"status", coboundary.feasible ? "feasible" : "infeasible"},
                      {"unknowns", coboundary.unknowns},
                      {"equations", coboundary.equations},
                      {"blocks", coboundary.blocks}};
    if (coboundary.feasible && coboundary.witness) {
        nlohmann::json w;
        for (const auto& [g, a] : coboundary.witness->phi0) w["phi0"][ctx->group().label(g)] = format_element(a);
        for (const auto& [i, a] : coboundary.witness->phi1) w["phi1"]["x" + std::to_string(i + 1)] = format_element(a);
        cb["witness"] = w;
    } else if (!coboundary.feasible) {
        nlohmann::json support = nlohmann::json::array();
        for (std::size_t i = 0; i < coboundary.certificate.size(); ++i)
            if (!coboundary.certificate[i].is_zero())
                support.push_back({{"row", i}, {"weight", coboundary.certificate[i].to_string()}});
        cb["certificate"] = {{"verified", coboundary.certificate_verified},
                             {"rows", coboundary.certificate.size()},
                             {"support", support},
                             {"first_row", coboundary.refuted_block}};
    }
    j["coboundary"] = cb;
    nlohmann::json ob{{"status", obstruction.applies ? "applies" : "not-applicable"}, {"reason", obstruction.reason}};
    for (const auto& [g, p] : obstruction.rhs) ob["rhs"][ctx->group().label(g)] = p.to_string();
    j["obstruction"] = ob;
    j["conclusion"] = conclusion();
    return j;
}

NontrivialityVerdict nontriviality(const HqStructure& st, std::uint32_t bound) {
    NontrivialityVerdict v;
    v.bound = bound;
    v.cocycle = cocycle_check(st);
    v.coboundary = coboundary_solve(st, bound);
    v.obstruction = direct_obstruction_check(st);
    return v;
}

}  // namespace hqdeform
