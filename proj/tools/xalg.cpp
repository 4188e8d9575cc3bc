#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xalg/io.hpp"

namespace {

constexpr const char* kToolName = "xalg";
constexpr const char* kToolVersion = "0.1.0";

using namespace xalg;

struct Session {
    std::string input_path;
    std::string output_path;
    bool json_output = false;
    std::string digest;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document load(Session& s) {
    std::string bytes = slurp(s.input_path);
    s.digest = digest_bytes(bytes);
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const Json::exception& e) {
        throw SchemaError("JSON parse error in " + s.input_path + ": " + e.what());
    }
    return document_from_json(j);
}

void print_human(const Report& r, std::ostream& out) {
    for (const auto& c : r.checks) {
        out << "  check " << c.name << ": " << (c.pass ? "pass" : "fail") << "\n";
        for (const auto& w : c.witnesses) {
            out << "    witness [" << w.relation << "] degrees(" << w.degrees << ") basis(";
            for (size_t i = 0; i < w.basis.size(); ++i)
                out << (i ? "," : "") << w.basis[i];
            out << ") defect(";
            for (size_t i = 0; i < w.defect.size(); ++i)
                out << (i ? "," : "") << w.defect[i].str();
            out << ")\n";
        }
    }
}

int emit(Session& s, const std::string& verb, const Report& report,
         const Json* structure_out = nullptr) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - s.started)
                       .count();
    if (structure_out && !s.output_path.empty()) {
        std::ofstream out(s.output_path);
        if (!out) throw SchemaError("cannot write " + s.output_path);
        out << structure_out->dump(2) << "\n";
    }
    if (s.json_output) {
        Json doc;
        doc["schema"] = 1;
        doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
        doc["verb"] = verb;
        doc["input"] = s.input_path;
        doc["input_digest"] = s.digest;
        doc["report"] = report_to_json(report);
        if (structure_out && s.output_path.empty()) doc["result"] = *structure_out;
        doc["timing_ms"] = elapsed;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << verb << " " << s.input_path << " (" << s.digest << ")\n";
        print_human(report, std::cout);
        if (structure_out && s.output_path.empty())
            std::cout << structure_out->dump(2) << "\n";
        std::cout << (report.valid() ? "OK" : "INVALID") << " (" << elapsed << " ms)\n";
    }
    return report.valid() ? 0 : 1;
}

Report validate_any(const Document& doc) {
    if (auto* a = std::get_if<PAlgebra>(&doc.structure)) return validate_algebra(doc.pres, *a);
    if (auto* a = std::get_if<DgPAlgebra1>(&doc.structure)) return validate_dg1(doc.pres, *a);
    if (auto* cm = std::get_if<CrossedModule>(&doc.structure)) return validate_xmod(doc.pres, *cm);
    if (auto* c = std::get_if<Cat1Algebra>(&doc.structure)) return validate_cat1(doc.pres, *c);
    return validate_2crossed(doc.pres, std::get<TwoCrossed>(doc.structure));
}

Structure to_functor_structure(const Document& doc) {
    if (auto* a = std::get_if<DgPAlgebra1>(&doc.structure)) return *a;
    if (auto* cm = std::get_if<CrossedModule>(&doc.structure)) return *cm;
    if (auto* c = std::get_if<Cat1Algebra>(&doc.structure)) return *c;
    throw SchemaError("kind " + doc.kind + " does not participate in conversions");
}

int run_validate(Session& s) {
    Document doc = load(s);
    return emit(s, "validate", validate_any(doc));
}

int run_convert(Session& s, const std::string& to) {
    Document doc = load(s);
    Report ok;
    ok.open("input-" + doc.kind);
    Json out;
    if (to == "xmod") {
        CrossedModule cm;
        if (auto* a = std::get_if<DgPAlgebra1>(&doc.structure)) cm = dg_to_xmod(doc.pres, *a);
        else if (auto* c = std::get_if<Cat1Algebra>(&doc.structure)) cm = cat1_to_xmod(doc.pres, *c);
        else throw SchemaError("convert --to xmod expects a dg1 or cat1 input");
        out = xmod_to_json(doc.pres, cm);
    } else if (to == "dg1") {
        DgPAlgebra1 a;
        if (auto* cm = std::get_if<CrossedModule>(&doc.structure)) a = xmod_to_dg(doc.pres, *cm);
        else if (auto* c = std::get_if<Cat1Algebra>(&doc.structure))
            a = xmod_to_dg(doc.pres, cat1_to_xmod(doc.pres, *c));
        else throw SchemaError("convert --to dg1 expects an xmod or cat1 input");
        out = dg1_to_json(doc.pres, a);
    } else if (to == "cat1") {
        Cat1Algebra c;
        if (auto* a = std::get_if<DgPAlgebra1>(&doc.structure)) c = dg_to_cat1(doc.pres, *a);
        else if (auto* cm = std::get_if<CrossedModule>(&doc.structure))
            c = xmod_to_cat1(doc.pres, *cm);
        else throw SchemaError("convert --to cat1 expects a dg1 or xmod input");
        out = cat1_to_json(doc.pres, c);
    } else {
        throw SchemaError("--to must be dg1, xmod or cat1");
    }
    return emit(s, "convert", ok, &out);
}

int run_semidirect(Session& s) { return run_convert(s, "cat1"); }

int run_compose(Session& s) {
    Document doc = load(s);
    auto* c = std::get_if<Cat1Algebra>(&doc.structure);
    if (!c) throw SchemaError("compose expects a cat1 input");
    CompositionReport rep = cat1_compose(doc.pres, *c);
    return emit(s, "compose", rep.report);
}

int run_tot(Session& s) {
    Document doc = load(s);
    auto* t = std::get_if<TwoCrossed>(&doc.structure);
    if (!t) throw SchemaError("tot expects an xmod2 input");
    DgPAlgebra2 a = tot_algebra(doc.pres, *t);
    Report rep = validate_dg2(doc.pres, a);
    Json out = dg2_to_json(doc.pres, a);
    return emit(s, "tot", rep, &out);
}

int run_derivations(Session& s) {
    Document doc = load(s);
    auto* g = std::get_if<DgPAlgebra1>(&doc.structure);
    if (!g) throw SchemaError("derivations expects a dg1 input");
    DerivationAlgebra der = derivations(doc.pres, *g);
    Report rep = validate_dg1(doc.pres, der.algebra);
    Json out = derivations_to_json(doc.pres, der);
    return emit(s, "derivations", rep, &out);
}

int run_adsquare(Session& s) {
    Document doc = load(s);
    auto* g = std::get_if<DgPAlgebra1>(&doc.structure);
    if (!g) throw SchemaError("adsquare expects a dg1 input");
    TwoCrossed t = ad_square(doc.pres, *g);
    Report rep = validate_2crossed(doc.pres, t);
    Json out = xmod2_to_json(doc.pres, t);
    return emit(s, "adsquare", rep, &out);
}

int run_roundtrip(Session& s, const std::string& path_arg) {
    Document doc = load(s);
    std::vector<std::string> path;
    std::stringstream ss(path_arg);
    std::string step;
    while (std::getline(ss, step, ','))
        if (!step.empty()) path.push_back(step);
    if (path.empty()) throw SchemaError("--path must list functors separated by commas");
    RoundTripReport rt = roundtrip(doc.pres, to_functor_structure(doc), path);
    Report rep;
    CheckResult& c = rep.open("roundtrip-" + rt.direction);
    c.pass = rt.isomorphic;
    c.witnesses = rt.mismatches;
    return emit(s, "roundtrip", rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact validators and equivalence functors for algebras over binary operads"};
    app.require_subcommand(1);

    Session s;
    std::string to, path_arg;

    auto add_common = [&](CLI::App* cmd, bool with_output) {
        cmd->add_option("input", s.input_path, "structure JSON file")->required();
        cmd->add_flag("--json", s.json_output, "emit a JSON report document");
        if (with_output)
            cmd->add_option("-o,--output", s.output_path, "write the result structure here");
        return cmd;
    };

    CLI::App* validate = add_common(app.add_subcommand("validate", "run the validator for the file's kind"), false);
    CLI::App* convert = add_common(app.add_subcommand("convert", "apply an equivalence functor"), true);
    convert->add_option("--to", to, "target kind: dg1, xmod or cat1")->required();
    CLI::App* semidirect = add_common(app.add_subcommand("semidirect", "semidirect Cat1 algebra of a dg1 or xmod input"), true);
    CLI::App* compose = add_common(app.add_subcommand("compose", "check the internal-category composition g o f = f + g - isg"), false);
    CLI::App* tot = add_common(app.add_subcommand("tot", "totalize an xmod2 structure to a dg algebra in degrees 0-2"), true);
    CLI::App* derivations_cmd = add_common(app.add_subcommand("derivations", "derivation dg Lie algebra of a dg1 Lie input"), true);
    CLI::App* adsquare = add_common(app.add_subcommand("adsquare", "the Der/ad square of a dg1 Lie input as an xmod2"), true);
    CLI::App* roundtrip_cmd = add_common(app.add_subcommand("roundtrip", "apply a functor path and compare with the input"), false);
    roundtrip_cmd->add_option("--path", path_arg, "comma-separated functor names")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(s);
        if (app.got_subcommand(convert)) return run_convert(s, to);
        if (app.got_subcommand(semidirect)) return run_semidirect(s);
        if (app.got_subcommand(compose)) return run_compose(s);
        if (app.got_subcommand(tot)) return run_tot(s);
        if (app.got_subcommand(derivations_cmd)) return run_derivations(s);
        if (app.got_subcommand(adsquare)) return run_adsquare(s);
        if (app.got_subcommand(roundtrip_cmd)) return run_roundtrip(s, path_arg);
    } catch (const InvalidStructure& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_human(e.report, std::cerr);
        return 1;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
