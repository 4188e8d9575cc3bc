#include "xalg/operad.hpp"

#include <algorithm>

namespace xalg {

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::None: return "none";
        case Symmetry::Symmetric: return "symmetric";
        case Symmetry::Antisymmetric: return "antisymmetric";
    }
    return "none";
}

Symmetry symmetry_from_string(const std::string& s) {
    if (s == "none") return Symmetry::None;
    if (s == "symmetric") return Symmetry::Symmetric;
    if (s == "antisymmetric") return Symmetry::Antisymmetric;
    throw ArgumentError("unknown symmetry: " + s);
}

const Generator* OperadPresentation::find_generator(const std::string& gname) const {
    for (const auto& g : generators)
        if (g.name == gname) return &g;
    return nullptr;
}

void OperadPresentation::check_well_formed() const {
    for (const auto& rel : relations)
        for (const auto& term : rel) {
            if (!find_generator(term.outer))
                throw ArgumentError("relation references undeclared generator " + term.outer);
            if (!find_generator(term.inner))
                throw ArgumentError("relation references undeclared generator " + term.inner);
            if (term.slot != 1 && term.slot != 2)
                throw ArgumentError("relation slot must be 1 or 2");
            if (!is_permutation(term.leaf_perm))
                throw ArgumentError("relation leaf permutation is invalid");
        }
}

namespace {

RelationTerm term(long coeff, const std::string& g, int slot, std::array<int, 3> perm) {
    return RelationTerm{Rational(coeff), g, g, slot, perm};
}

}  // namespace

OperadPresentation builtin_presentation(const std::string& name) {
    OperadPresentation p;
    p.name = name;
    const std::array<int, 3> id{0, 1, 2};
    if (name == "assoc" || name == "comm") {
        p.generators = {Generator{"mul", name == "comm" ? Symmetry::Symmetric : Symmetry::None}};
        // (ab)c - a(bc)
        p.relations = {{term(1, "mul", 1, id), term(-1, "mul", 2, id)}};
        p.relation_names = {"associativity"};
    } else if (name == "lie") {
        p.generators = {Generator{"bracket", Symmetry::Antisymmetric}};
        // [[a,b],c] - [a,[b,c]] + [b,[a,c]], the last term rerouted by the
        // transposition (1 2) so the evaluator supplies (-1)^{|a||b|}.
        p.relations = {{term(1, "bracket", 1, id), term(-1, "bracket", 2, id),
                        term(1, "bracket", 2, {1, 0, 2})}};
        p.relation_names = {"jacobi"};
    } else if (name == "leibniz") {
        p.generators = {Generator{"bracket", Symmetry::None}};
        // right Leibniz: [[a,b],c] - [[a,c],b] - [a,[b,c]], middle term
        // rerouted by (2 3) for the graded sign (-1)^{|b||c|}.
        p.relations = {{term(1, "bracket", 1, id), term(-1, "bracket", 1, {0, 2, 1}),
                        term(-1, "bracket", 2, id)}};
        p.relation_names = {"leibniz"};
    } else {
        throw ArgumentError("unknown builtin presentation: " + name);
    }
    return p;
}

void MultTable::set(const std::string& gen, Deg a, Deg b, BilinearMap m) {
    if (m.dim_a() != dim(a) || m.dim_b() != dim(b) || m.dim_out() != dim(a + b))
        throw ShapeError("multiplication component shape does not match carrier dims");
    maps_[gen][{a, b}] = std::move(m);
}

const BilinearMap* MultTable::component(const std::string& gen, Deg a, Deg b) const {
    auto git = maps_.find(gen);
    if (git == maps_.end()) return nullptr;
    auto it = git->second.find({a, b});
    return it == git->second.end() ? nullptr : &it->second;
}

Vec MultTable::eval(const std::string& gen, Deg a, Deg b, const Vec& u, const Vec& v) const {
    Deg out = a + b;
    if (!carries(out) || dim(out) == 0 || dim(a) == 0 || dim(b) == 0)
        return zero_vec(dim(out));
    const BilinearMap* m = component(gen, a, b);
    if (!m)
        throw MissingComponent("missing multiplication component " + gen + " at degrees " +
                               a.str() + "," + b.str());
    return m->eval(u, v);
}

Vec relation_defect_vec(const OperadPresentation&, const MultTable& mult,
                        const Relation& relation, std::array<Deg, 3> degrees,
                        const std::array<Vec, 3>& inputs) {
    Deg total = degrees[0] + degrees[1] + degrees[2];
    Vec defect = zero_vec(mult.dim(total));
    if (!mult.carries(total) || mult.dim(total) == 0) return defect;
    for (const auto& term : relation) {
        std::array<const Vec*, 3> y{};
        std::array<Deg, 3> f{};
        for (int i = 0; i < 3; ++i) {
            y[size_t(term.leaf_perm[size_t(i)])] = &inputs[size_t(i)];
            f[size_t(term.leaf_perm[size_t(i)])] = degrees[size_t(i)];
        }
        int sign = koszul_sign(term.leaf_perm, degrees);
        Vec value;
        if (term.slot == 1) {
            Vec w = mult.eval(term.inner, f[0], f[1], *y[0], *y[1]);
            value = mult.eval(term.outer, f[0] + f[1], f[2], w, *y[2]);
        } else {
            Vec w = mult.eval(term.inner, f[1], f[2], *y[1], *y[2]);
            value = mult.eval(term.outer, f[0], f[1] + f[2], *y[0], w);
        }
        Rational c = sign < 0 ? -term.coefficient : term.coefficient;
        axpy(defect, c, value);
    }
    return defect;
}

Vec relation_defect(const OperadPresentation& pres, const MultTable& mult,
                    const Relation& relation, std::array<Deg, 3> degrees,
                    std::array<int, 3> inputs) {
    std::array<Vec, 3> vecs;
    for (int i = 0; i < 3; ++i) {
        int n = mult.dim(degrees[size_t(i)]);
        if (inputs[size_t(i)] < 0 || inputs[size_t(i)] >= n)
            throw ShapeError("basis index out of range for its degree");
        vecs[size_t(i)] = basis_vec(n, inputs[size_t(i)]);
    }
    return relation_defect_vec(pres, mult, relation, degrees, vecs);
}

namespace {

std::string pattern_str(std::array<Deg, 3> d) {
    return d[0].str() + "," + d[1].str() + "," + d[2].str();
}

}  // namespace

void check_relations(const OperadPresentation& pres, const MultTable& mult, CheckResult& out) {
    std::vector<Deg> degs;
    for (const auto& [d, n] : mult.dims()) degs.push_back(d);
    for (size_t r = 0; r < pres.relations.size(); ++r) {
        std::string rel_name =
            r < pres.relation_names.size() ? pres.relation_names[r] : "relation" + std::to_string(r);
        for (Deg d1 : degs)
            for (Deg d2 : degs)
                for (Deg d3 : degs) {
                    std::array<Deg, 3> pattern{d1, d2, d3};
                    if (!mult.carries(d1 + d2 + d3)) continue;
                    for (int i = 0; i < mult.dim(d1); ++i)
                        for (int j = 0; j < mult.dim(d2); ++j)
                            for (int k = 0; k < mult.dim(d3); ++k) {
                                Vec defect =
                                    relation_defect(pres, mult, pres.relations[r], pattern, {i, j, k});
                                if (!is_zero(defect)) {
                                    out.pass = false;
                                    out.witnesses.push_back(Witness{out.name, rel_name,
                                                                    pattern_str(pattern),
                                                                    {i, j, k}, defect});
                                }
                            }
                }
    }
}

void check_symmetry(const OperadPresentation& pres, const MultTable& mult, CheckResult& out) {
    for (const auto& gen : pres.generators) {
        if (gen.symmetry == Symmetry::None) continue;
        for (const auto& [a, na] : mult.dims())
            for (const auto& [b, nb] : mult.dims()) {
                if (!mult.carries(a + b) || mult.dim(a + b) == 0) continue;
                int sign = a.pairing(b) ? -1 : 1;
                if (gen.symmetry == Symmetry::Antisymmetric) sign = -sign;
                for (int i = 0; i < na; ++i)
                    for (int j = 0; j < nb; ++j) {
                        Vec lhs = mult.eval(gen.name, a, b, basis_vec(na, i), basis_vec(nb, j));
                        Vec rhs = mult.eval(gen.name, b, a, basis_vec(nb, j), basis_vec(na, i));
                        Vec defect = sub(lhs, scale(Rational(sign), rhs));
                        if (!is_zero(defect)) {
                            out.pass = false;
                            out.witnesses.push_back(Witness{out.name, gen.name + "-" + to_string(gen.symmetry),
                                                            a.str() + "," + b.str(),
                                                            {i, j}, defect});
                        }
                    }
            }
    }
}

}  // namespace xalg
