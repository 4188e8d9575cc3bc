#pragma once

#include <json.hpp>

#include "xalg/functors.hpp"
#include "xalg/higher.hpp"

namespace xalg {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// Structure file: schema version, theory selector, kind discriminator and
/// the per-kind payload. Dimensions are capped by XALG_MAX_DIM (default 64).
struct Document {
    OperadPresentation pres;
    std::string kind;  // algebra | dg1 | xmod | cat1 | xmod2
    std::variant<PAlgebra, DgPAlgebra1, CrossedModule, Cat1Algebra, TwoCrossed> structure;
};

int max_dim();

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Matrix matrix_from_json(const Json& j, int rows, int cols);
Json matrix_to_json(const Matrix& m);
BilinearMap tensor_from_json(const Json& j, int dim_a, int dim_b, int dim_out);
Json tensor_to_json(const BilinearMap& m);

OperadPresentation presentation_from_json(const Json& j);

Document document_from_json(const Json& j);
Document load_document(const std::string& path);

Json algebra_to_json(const OperadPresentation& pres, const PAlgebra& a);
Json dg1_to_json(const OperadPresentation& pres, const DgPAlgebra1& a);
Json xmod_to_json(const OperadPresentation& pres, const CrossedModule& cm);
Json cat1_to_json(const OperadPresentation& pres, const Cat1Algebra& c);
Json xmod2_to_json(const OperadPresentation& pres, const TwoCrossed& t);
Json dg2_to_json(const OperadPresentation& pres, const DgPAlgebra2& a);
Json derivations_to_json(const OperadPresentation& pres, const DerivationAlgebra& d);

Json report_to_json(const Report& r);
Json witness_to_json(const Witness& w);

/// FNV-1a 64-bit digest of the raw input bytes, as "fnv1a64:<hex>".
std::string digest_bytes(const std::string& bytes);

}  // namespace xalg
