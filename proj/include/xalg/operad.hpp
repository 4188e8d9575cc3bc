#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "xalg/graded.hpp"
#include "xalg/report.hpp"

namespace xalg {

enum class Symmetry { None, Symmetric, Antisymmetric };

std::string to_string(Symmetry s);
Symmetry symmetry_from_string(const std::string& s);

/// Binary operation generator. The symmetry constrains structure maps up to
/// the Koszul sign: symmetric means mu(a,b) = (-1)^{<|a|,|b|>} mu(b,a),
/// antisymmetric negates the right-hand side.
struct Generator {
    std::string name;
    Symmetry symmetry = Symmetry::None;
};

/// One summand coefficient * (outer o_slot inner) with inputs rerouted by
/// leaf_perm: input i feeds leaf leaf_perm[i] of the composite (0-based),
/// and evaluation on homogeneous inputs picks up the Koszul sign of that
/// rearrangement. slot 1 composes into the first input of outer, slot 2
/// into the second.
struct RelationTerm {
    Rational coefficient;
    std::string outer;
    std::string inner;
    int slot = 1;
    std::array<int, 3> leaf_perm{0, 1, 2};
};

using Relation = std::vector<RelationTerm>;

/// Binary-generated operad given by generators and quadratic relations;
/// every relation is a formal sum expected to evaluate to zero on algebras.
struct OperadPresentation {
    std::string name;
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    std::vector<std::string> relation_names;

    const Generator* find_generator(const std::string& gname) const;
    void check_well_formed() const;
};

/// assoc, comm, lie or leibniz. Conventions: lie is the graded Jacobi
/// identity [[a,b],c] - [a,[b,c]] + (-1)^{|a||b|}[b,[a,c]]; leibniz is the
/// right Leibniz rule [[a,b],c] - (-1)^{|b||c|}[[a,c],b] - [a,[b,c]].
OperadPresentation builtin_presentation(const std::string& name);

struct MissingComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree-indexed family of structure maps for one carrier: the component
/// for generator g at degrees (a, b) is a bilinear map C_a x C_b -> C_{a+b}.
/// Components whose target degree lies outside the carrier are zero and
/// need not be stored; a missing component with an in-carrier target is a
/// structure-incompleteness error.
class MultTable {
public:
    MultTable() = default;

    void set_dim(Deg d, int dim) { dims_[d] = dim; }
    int dim(Deg d) const {
        auto it = dims_.find(d);
        return it == dims_.end() ? 0 : it->second;
    }
    bool carries(Deg d) const { return dim(d) > 0 || dims_.count(d) > 0; }
    const std::map<Deg, int>& dims() const { return dims_; }

    void set(const std::string& gen, Deg a, Deg b, BilinearMap m);
    const BilinearMap* component(const std::string& gen, Deg a, Deg b) const;

    /// Evaluate generator gen on homogeneous vectors u in C_a, v in C_b.
    /// Returns the zero vector of C_{a+b} when that degree is absent.
    Vec eval(const std::string& gen, Deg a, Deg b, const Vec& u, const Vec& v) const;

private:
    std::map<Deg, int> dims_;
    std::map<std::string, std::map<std::pair<Deg, Deg>, BilinearMap>> maps_;
};

/// Exact value of one relation on a homogeneous basis triple: each term is
/// evaluated with the Koszul sign of its leaf permutation acting on the
/// degree triple, and the signed sum is returned in C_{d1+d2+d3} (empty
/// when that degree is outside the carrier; all terms vanish there).
Vec relation_defect(const OperadPresentation& pres, const MultTable& mult,
                    const Relation& relation, std::array<Deg, 3> degrees,
                    std::array<int, 3> inputs);

/// Same, with arbitrary homogeneous input vectors instead of basis indices.
Vec relation_defect_vec(const OperadPresentation& pres, const MultTable& mult,
                        const Relation& relation, std::array<Deg, 3> degrees,
                        const std::array<Vec, 3>& inputs);

/// Relation sweep over all basis triples for every degree pattern drawn
/// from the carrier degrees; failures are appended as witnesses.
void check_relations(const OperadPresentation& pres, const MultTable& mult,
                     CheckResult& out);

/// Generator symmetry constraints on all homogeneous basis pairs.
void check_symmetry(const OperadPresentation& pres, const MultTable& mult,
                    CheckResult& out);

}  // namespace xalg
