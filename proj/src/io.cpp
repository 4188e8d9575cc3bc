#include "xalg/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace xalg {

int max_dim() {
    if (const char* env = std::getenv("XALG_MAX_DIM")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

namespace {

int dim_from_json(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long>() < 0)
        throw SchemaError(what + " must be a non-negative integer");
    long v = j.get<long>();
    if (v > max_dim())
        throw SchemaError(what + " exceeds XALG_MAX_DIM=" + std::to_string(max_dim()));
    return int(v);
}

const Json& field(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field \"" + key + "\"");
    return *it;
}

}  // namespace

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const ArgumentError& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("rationals must be integers or \"p/q\" strings");
}

Json rational_to_json(const Rational& r) {
    if (r.fits_int64()) return Json(r.to_long());
    return Json(r.str());
}

Matrix matrix_from_json(const Json& j, int rows, int cols) {
    if (!j.is_array() || int(j.size()) != rows)
        throw SchemaError("matrix must have " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j[size_t(i)];
        if (!row.is_array() || int(row.size()) != cols)
            throw SchemaError("matrix row must have " + std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k) m.at(i, k) = rational_from_json(row[size_t(k)]);
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

BilinearMap tensor_from_json(const Json& j, int dim_a, int dim_b, int dim_out) {
    if (!j.is_array() || int(j.size()) != dim_out)
        throw SchemaError("tensor must have " + std::to_string(dim_out) + " output slices");
    BilinearMap m(dim_a, dim_b, dim_out);
    for (int k = 0; k < dim_out; ++k) {
        const Json& slice = j[size_t(k)];
        if (!slice.is_array() || int(slice.size()) != dim_a)
            throw SchemaError("tensor slice must have " + std::to_string(dim_a) + " rows");
        for (int a = 0; a < dim_a; ++a) {
            const Json& row = slice[size_t(a)];
            if (!row.is_array() || int(row.size()) != dim_b)
                throw SchemaError("tensor row must have " + std::to_string(dim_b) + " entries");
            for (int b = 0; b < dim_b; ++b) m.at(k, a, b) = rational_from_json(row[size_t(b)]);
        }
    }
    return m;
}

Json tensor_to_json(const BilinearMap& m) {
    Json out = Json::array();
    for (int k = 0; k < m.dim_out(); ++k) {
        Json slice = Json::array();
        for (int a = 0; a < m.dim_a(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < m.dim_b(); ++b) row.push_back(rational_to_json(m.at(k, a, b)));
            slice.push_back(std::move(row));
        }
        out.push_back(std::move(slice));
    }
    return out;
}

OperadPresentation presentation_from_json(const Json& j) {
    if (j.contains("presentation")) {
        const Json& p = field(j, "presentation");
        OperadPresentation pres;
        pres.name = p.value("name", std::string("custom"));
        for (const Json& g : field(p, "generators")) {
            Generator gen;
            gen.name = field(g, "name").get<std::string>();
            gen.symmetry = symmetry_from_string(g.value("symmetry", std::string("none")));
            pres.generators.push_back(std::move(gen));
        }
        int index = 0;
        for (const Json& rel : field(p, "relations")) {
            Relation relation;
            for (const Json& t : rel) {
                RelationTerm term;
                term.coefficient = rational_from_json(field(t, "coeff"));
                term.outer = field(t, "outer").get<std::string>();
                term.inner = field(t, "inner").get<std::string>();
                term.slot = field(t, "slot").get<int>();
                const Json& perm = field(t, "perm");
                if (!perm.is_array() || perm.size() != 3)
                    throw SchemaError("relation term perm must list 3 leaves");
                for (int i = 0; i < 3; ++i) {
                    int leaf = perm[size_t(i)].get<int>();
                    if (leaf < 1 || leaf > 3) throw SchemaError("perm entries are 1-based leaves");
                    term.leaf_perm[size_t(i)] = leaf - 1;
                }
                relation.push_back(std::move(term));
            }
            pres.relations.push_back(std::move(relation));
            pres.relation_names.push_back("relation" + std::to_string(index++));
        }
        try {
            pres.check_well_formed();
        } catch (const ArgumentError& e) {
            throw SchemaError(e.what());
        }
        return pres;
    }
    if (!j.contains("theory")) throw SchemaError("missing \"theory\" or \"presentation\"");
    try {
        return builtin_presentation(field(j, "theory").get<std::string>());
    } catch (const ArgumentError& e) {
        throw SchemaError(e.what());
    }
}

namespace {

PAlgebra algebra_from_json(const OperadPresentation& pres, const Json& j) {
    PAlgebra a;
    a.dim = dim_from_json(field(j, "dim"), "dim");
    const Json& mult = field(j, "mult");
    for (const auto& g : pres.generators)
        a.mult[g.name] = tensor_from_json(field(mult, g.name), a.dim, a.dim, a.dim);
    return a;
}

DgPAlgebra1 dg1_from_json(const OperadPresentation& pres, const Json& j) {
    DgPAlgebra1 a;
    int dim0 = dim_from_json(field(j, "dim0"), "dim0");
    int dim1 = dim_from_json(field(j, "dim1"), "dim1");
    a.carrier = Complex01(dim1, dim0, matrix_from_json(field(j, "d"), dim0, dim1));
    const Json& mult = field(j, "mult");
    for (const auto& g : pres.generators) {
        const Json& comps = field(mult, g.name);
        DgMult m;
        m.m00 = tensor_from_json(field(comps, "00"), dim0, dim0, dim0);
        m.m10 = tensor_from_json(field(comps, "10"), dim1, dim0, dim1);
        m.m01 = tensor_from_json(field(comps, "01"), dim0, dim1, dim1);
        a.mult[g.name] = std::move(m);
    }
    return a;
}

CrossedModule xmod_from_json(const OperadPresentation& pres, const Json& j) {
    CrossedModule cm;
    cm.x = algebra_from_json(pres, field(j, "x"));
    cm.b = algebra_from_json(pres, field(j, "b"));
    const Json& left = field(j, "actLeft");
    const Json& right = field(j, "actRight");
    for (const auto& g : pres.generators) {
        cm.act_left[g.name] = tensor_from_json(field(left, g.name), cm.b.dim, cm.x.dim, cm.x.dim);
        cm.act_right[g.name] = tensor_from_json(field(right, g.name), cm.x.dim, cm.b.dim, cm.x.dim);
    }
    cm.d = matrix_from_json(field(j, "d"), cm.b.dim, cm.x.dim);
    return cm;
}

Cat1Algebra cat1_from_json(const OperadPresentation& pres, const Json& j) {
    Cat1Algebra c;
    c.e = algebra_from_json(pres, field(j, "e"));
    c.b = algebra_from_json(pres, field(j, "b"));
    c.s = matrix_from_json(field(j, "s"), c.b.dim, c.e.dim);
    c.t = matrix_from_json(field(j, "t"), c.b.dim, c.e.dim);
    c.i = matrix_from_json(field(j, "i"), c.e.dim, c.b.dim);
    return c;
}

Deg bideg_from_key(const std::string& key) {
    if (key.size() != 2 || (key[0] != '0' && key[0] != '1') || (key[1] != '0' && key[1] != '1'))
        throw SchemaError("bidegree keys must be 00, 10, 01 or 11");
    return Deg(key[0] - '0', key[1] - '0');
}

std::string bideg_key(Deg d) {
    return std::string(1, char('0' + d.a)) + std::string(1, char('0' + d.b));
}

TwoCrossed xmod2_from_json(const OperadPresentation& pres, const Json& j) {
    TwoCrossed t;
    const Json& dims = field(j, "dims");
    t.square.dim00 = dim_from_json(field(dims, "00"), "dims.00");
    t.square.dim10 = dim_from_json(field(dims, "10"), "dims.10");
    t.square.dim01 = dim_from_json(field(dims, "01"), "dims.01");
    t.square.dim11 = dim_from_json(field(dims, "11"), "dims.11");
    t.square.dh0 = matrix_from_json(field(j, "dh0"), t.square.dim00, t.square.dim10);
    t.square.dh1 = matrix_from_json(field(j, "dh1"), t.square.dim01, t.square.dim11);
    t.square.dv0 = matrix_from_json(field(j, "dv0"), t.square.dim00, t.square.dim01);
    t.square.dv1 = matrix_from_json(field(j, "dv1"), t.square.dim10, t.square.dim11);
    const Json& mult = field(j, "mult");
    for (const auto& g : pres.generators) {
        const Json& comps = field(mult, g.name);
        for (auto it = comps.begin(); it != comps.end(); ++it) {
            const std::string key = it.key();
            auto x = key.find('x');
            if (x == std::string::npos) throw SchemaError("component keys look like \"00x10\"");
            Deg a = bideg_from_key(key.substr(0, x));
            Deg b = bideg_from_key(key.substr(x + 1));
            Deg target = a + b;
            if (target.a > 1 || target.b > 1)
                throw SchemaError("component " + key + " has target outside the square");
            t.mult[g.name][{a, b}] = tensor_from_json(it.value(), t.square.dim(a),
                                                      t.square.dim(b), t.square.dim(target));
        }
        // omitted in-square components are zero
        const std::array<Deg, 4> degs{Deg(0, 0), Deg(1, 0), Deg(0, 1), Deg(1, 1)};
        for (Deg a : degs)
            for (Deg b : degs) {
                Deg target = a + b;
                if (target.a > 1 || target.b > 1) continue;
                auto& entry = t.mult[g.name];
                if (!entry.count({a, b}))
                    entry[{a, b}] =
                        BilinearMap(t.square.dim(a), t.square.dim(b), t.square.dim(target));
            }
    }
    return t;
}

bool is_builtin(const std::string& name) {
    return name == "assoc" || name == "comm" || name == "lie" || name == "leibniz";
}

Json presentation_to_json(const OperadPresentation& pres) {
    Json p;
    p["name"] = pres.name;
    Json gens = Json::array();
    for (const auto& g : pres.generators) {
        Json jg;
        jg["name"] = g.name;
        jg["symmetry"] = to_string(g.symmetry);
        gens.push_back(std::move(jg));
    }
    p["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const auto& rel : pres.relations) {
        Json jr = Json::array();
        for (const auto& t : rel) {
            Json jt;
            jt["coeff"] = rational_to_json(t.coefficient);
            jt["outer"] = t.outer;
            jt["inner"] = t.inner;
            jt["slot"] = t.slot;
            jt["perm"] = Json::array(
                {t.leaf_perm[0] + 1, t.leaf_perm[1] + 1, t.leaf_perm[2] + 1});
            jr.push_back(std::move(jt));
        }
        rels.push_back(std::move(jr));
    }
    p["relations"] = std::move(rels);
    return p;
}

Json base_doc(const OperadPresentation& pres, const std::string& kind) {
    Json j;
    j["schema"] = 1;
    if (is_builtin(pres.name))
        j["theory"] = pres.name;
    else
        j["presentation"] = presentation_to_json(pres);
    j["kind"] = kind;
    return j;
}

Json algebra_body(const OperadPresentation& pres, const PAlgebra& a) {
    Json j;
    j["dim"] = a.dim;
    Json mult;
    for (const auto& g : pres.generators) mult[g.name] = tensor_to_json(a.mult.at(g.name));
    j["mult"] = std::move(mult);
    return j;
}

}  // namespace

Document document_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("input must be a JSON object");
    if (j.value("schema", 1) != 1) throw SchemaError("unsupported schema version");
    Document doc;
    doc.pres = presentation_from_json(j);
    doc.kind = field(j, "kind").get<std::string>();
    if (doc.kind == "algebra") doc.structure = algebra_from_json(doc.pres, j);
    else if (doc.kind == "dg1") doc.structure = dg1_from_json(doc.pres, j);
    else if (doc.kind == "xmod") doc.structure = xmod_from_json(doc.pres, j);
    else if (doc.kind == "cat1") doc.structure = cat1_from_json(doc.pres, j);
    else if (doc.kind == "xmod2") doc.structure = xmod2_from_json(doc.pres, j);
    else throw SchemaError("unknown kind: " + doc.kind);
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what());
    }
    return document_from_json(j);
}

Json algebra_to_json(const OperadPresentation& pres, const PAlgebra& a) {
    Json j = base_doc(pres, "algebra");
    j.update(algebra_body(pres, a));
    return j;
}

Json dg1_to_json(const OperadPresentation& pres, const DgPAlgebra1& a) {
    Json j = base_doc(pres, "dg1");
    j["dim0"] = a.carrier.dim0;
    j["dim1"] = a.carrier.dim1;
    j["d"] = matrix_to_json(a.carrier.d);
    Json mult;
    for (const auto& g : pres.generators) {
        const DgMult& m = a.mult.at(g.name);
        Json comps;
        comps["00"] = tensor_to_json(m.m00);
        comps["10"] = tensor_to_json(m.m10);
        comps["01"] = tensor_to_json(m.m01);
        mult[g.name] = std::move(comps);
    }
    j["mult"] = std::move(mult);
    return j;
}

Json xmod_to_json(const OperadPresentation& pres, const CrossedModule& cm) {
    Json j = base_doc(pres, "xmod");
    j["x"] = algebra_body(pres, cm.x);
    j["b"] = algebra_body(pres, cm.b);
    Json left, right;
    for (const auto& g : pres.generators) {
        left[g.name] = tensor_to_json(cm.left(g.name));
        right[g.name] = tensor_to_json(cm.right(g.name));
    }
    j["actLeft"] = std::move(left);
    j["actRight"] = std::move(right);
    j["d"] = matrix_to_json(cm.d);
    return j;
}

Json cat1_to_json(const OperadPresentation& pres, const Cat1Algebra& c) {
    Json j = base_doc(pres, "cat1");
    j["e"] = algebra_body(pres, c.e);
    j["b"] = algebra_body(pres, c.b);
    j["s"] = matrix_to_json(c.s);
    j["t"] = matrix_to_json(c.t);
    j["i"] = matrix_to_json(c.i);
    return j;
}

Json xmod2_to_json(const OperadPresentation& pres, const TwoCrossed& t) {
    Json j = base_doc(pres, "xmod2");
    Json dims;
    dims["00"] = t.square.dim00;
    dims["10"] = t.square.dim10;
    dims["01"] = t.square.dim01;
    dims["11"] = t.square.dim11;
    j["dims"] = std::move(dims);
    j["dh0"] = matrix_to_json(t.square.dh0);
    j["dh1"] = matrix_to_json(t.square.dh1);
    j["dv0"] = matrix_to_json(t.square.dv0);
    j["dv1"] = matrix_to_json(t.square.dv1);
    Json mult;
    for (const auto& [gen, comps] : t.mult) {
        Json entry;
        for (const auto& [degs, m] : comps)
            entry[bideg_key(degs.first) + "x" + bideg_key(degs.second)] = tensor_to_json(m);
        mult[gen] = std::move(entry);
    }
    j["mult"] = std::move(mult);
    return j;
}

Json dg2_to_json(const OperadPresentation& pres, const DgPAlgebra2& a) {
    Json j = base_doc(pres, "dg2");
    j["dims"] = Json::array({a.dims[0], a.dims[1], a.dims[2]});
    j["d1"] = matrix_to_json(a.d1);
    j["d2"] = matrix_to_json(a.d2);
    Json mult;
    for (const auto& [gen, comps] : a.mult) {
        Json entry;
        for (const auto& [degs, m] : comps)
            entry[std::to_string(degs.first) + std::to_string(degs.second)] = tensor_to_json(m);
        mult[gen] = std::move(entry);
    }
    j["mult"] = std::move(mult);
    return j;
}

Json derivations_to_json(const OperadPresentation& pres, const DerivationAlgebra& d) {
    Json j = base_doc(pres, "derivations");
    j["dim_der0"] = int(d.der0_basis.size());
    j["dim_der1"] = int(d.der1_basis.size());
    Json der0 = Json::array();
    for (const auto& [d0, d1] : d.der0_basis) {
        Json pair;
        pair["on_g0"] = matrix_to_json(d0);
        pair["on_g1"] = matrix_to_json(d1);
        der0.push_back(std::move(pair));
    }
    j["der0"] = std::move(der0);
    Json der1 = Json::array();
    for (const auto& e : d.der1_basis) der1.push_back(matrix_to_json(e));
    j["der1"] = std::move(der1);
    j["boundary"] = matrix_to_json(d.algebra.carrier.d);
    const std::string gen = pres.generators.front().name;
    const DgMult& m = d.algebra.mult.at(gen);
    Json bracket;
    bracket["00"] = tensor_to_json(m.m00);
    bracket["10"] = tensor_to_json(m.m10);
    bracket["01"] = tensor_to_json(m.m01);
    j["bracket"] = std::move(bracket);
    return j;
}

Json witness_to_json(const Witness& w) {
    Json j;
    j["check"] = w.check;
    j["relation"] = w.relation;
    j["degrees"] = w.degrees;
    j["basis"] = w.basis;
    Json defect = Json::array();
    for (const auto& x : w.defect) defect.push_back(rational_to_json(x));
    j["defect"] = std::move(defect);
    return j;
}

Json report_to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        Json ws = Json::array();
        for (const auto& w : c.witnesses) ws.push_back(witness_to_json(w));
        jc["witnesses"] = std::move(ws);
        checks.push_back(std::move(jc));
    }
    Json j;
    j["valid"] = r.valid();
    j["checks"] = std::move(checks);
    return j;
}

std::string digest_bytes(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << h;
    return out.str();
}

}  // namespace xalg
