#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "psalg/errors.hpp"
#include "psalg/json_io.hpp"

// Exit codes: 0 success, 1 a requested check failed, 2 malformed input or any
// other kernel error. Reports on stdout are byte-identical for identical
// inputs and flags; wall time goes to stderr so it cannot break that.

namespace {

using namespace psalg;

LiePtr lie_from_arg(const std::string& arg) {
    if (arg.rfind("abelian", 0) == 0 && arg.size() > 7) {
        try {
            return LieAlgebra::abelian(std::stoi(arg.substr(7)));
        } catch (const std::exception&) {
            throw MalformedInput("bad lie algebra preset '" + arg + "'");
        }
    }
    if (arg == "heisenberg") return LieAlgebra::heisenberg();
    if (arg == "sl2") return LieAlgebra::sl2like();
    return lie_from_json(load_json_file(arg));
}

Axiom parse_axiom(const std::string& s) {
    if (s == "assoc") return Axiom::Assoc;
    if (s == "left-prelie") return Axiom::LeftPreLie;
    if (s == "right-prelie") return Axiom::RightPreLie;
    throw MalformedInput("unknown axiom '" + s + "' (expected assoc, left-prelie, or right-prelie)");
}

// Accepts "[1,0,-2]" or "1,0,-2"; entries are exact rationals.
DeltaVector vector_from_arg(const std::string& arg, const LiePtr& lie) {
    std::string body = arg;
    if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != static_cast<size_t>(lie->dim()))
        throw MalformedInput("vector '" + arg + "' must have " + std::to_string(lie->dim()) +
                             " entries");
    DeltaVector v = lie->zero_vector();
    for (size_t i = 0; i < parts.size(); ++i) v[i] = rat_from_string(parts[i]);
    return v;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string triple_str(const TripleFailure& f) {
    return "(" + std::to_string(f.i) + "," + std::to_string(f.j) + "," + std::to_string(f.k) + ")";
}

int run_check(const std::string& input, const std::string& axiom, bool all, bool json) {
    ProductTable T = table_from_json(load_json_file(input));
    std::vector<Axiom> axioms;
    if (all) {
        axioms = {Axiom::Assoc, Axiom::LeftPreLie, Axiom::RightPreLie};
    } else {
        if (axiom.empty()) throw MalformedInput("check needs --axiom or --all");
        axioms = {parse_axiom(axiom)};
    }
    bool pass = true;
    std::vector<AxiomReport> reports;
    for (Axiom ax : axioms) {
        reports.push_back(check_axiom(T, ax));
        pass = pass && reports.back().pass;
    }
    if (json) {
        Json out;
        out["command"] = "check";
        out["input"] = input;
        out["pass"] = pass;
        Json reps = Json::array();
        for (const AxiomReport& r : reports) reps.push_back(axiom_report_to_json(r));
        out["reports"] = std::move(reps);
        print_json(out);
    } else {
        std::cout << "check: " << input << "\n";
        for (const AxiomReport& r : reports) {
            std::cout << "  " << axiom_name(r.axiom) << ": ";
            if (r.pass) {
                std::cout << "PASS\n";
            } else {
                std::cout << "FAIL on triple " << triple_str(r.failures.front()) << "\n";
            }
        }
        std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

// "cur" builds the current pseudoalgebra of explicit structure constants,
// supplied in the params file as {"rank": n, "m": [[[...]]]}.
ProductTable current_from_params(const Json& pj, const LiePtr& lie) {
    const int rank = pj.contains("rank") && pj["rank"].is_number_integer() ? pj["rank"].get<int>() : 0;
    if (rank <= 0) throw MalformedInput("entry 'cur' needs a positive integer 'rank' in the params file");
    if (!pj.contains("m") || !pj["m"].is_array() || pj["m"].size() != static_cast<size_t>(rank))
        throw MalformedInput("entry 'cur' needs an 'm' field with rank x rank x rank constants");
    std::vector<std::vector<std::vector<Rat>>> m(
        rank, std::vector<std::vector<Rat>>(rank, std::vector<Rat>(rank, Rat(0))));
    for (int i = 0; i < rank; ++i) {
        const Json& row = pj["m"][i];
        if (!row.is_array() || row.size() != static_cast<size_t>(rank))
            throw MalformedInput("entry 'cur' needs an 'm' field with rank x rank x rank constants");
        for (int j = 0; j < rank; ++j) {
            const Json& cell = row[j];
            if (!cell.is_array() || cell.size() != static_cast<size_t>(rank))
                throw MalformedInput("entry 'cur' needs an 'm' field with rank x rank x rank constants");
            for (int k = 0; k < rank; ++k) m[i][j][k] = rat_from_json(cell[k]);
        }
    }
    return current_table(lie, rank, m);
}

int run_catalog(const std::string& entry, const std::string& lie_arg, const std::string& params_file,
                const std::string& emit, bool verify, bool json) {
    LiePtr lie = lie_from_arg(lie_arg);
    Json pj = params_file.empty() ? Json::object() : load_json_file(params_file);

    Instantiated inst;
    std::vector<Axiom> axioms;
    if (entry == "cur") {
        inst.table = current_from_params(pj, lie);
        inst.all_conditions_hold = true;
        axioms = {Axiom::LeftPreLie};
    } else {
        const CatalogEntry& e = find_entry(entry);
        inst = instantiate(e, params_from_json(pj, lie), lie);
        axioms = e.axioms;
    }

    bool pass = true;
    std::vector<AxiomReport> reports;
    if (verify)
        for (Axiom ax : axioms) {
            reports.push_back(check_axiom(inst.table, ax));
            pass = pass && reports.back().pass;
        }

    if (!emit.empty()) write_json_file(emit, table_to_json(inst.table));

    if (json) {
        Json out = instantiated_to_json(inst, entry);
        out["command"] = "catalog";
        if (verify) {
            out["pass"] = pass;
            Json reps = Json::array();
            for (const AxiomReport& r : reports) reps.push_back(axiom_report_to_json(r));
            out["reports"] = std::move(reps);
        }
        print_json(out);
    } else {
        std::cout << "catalog entry " << entry << " on " << lie->name() << "\n";
        for (const SideConditionResult& c : inst.conditions)
            std::cout << "  condition " << c.description << ": " << (c.holds ? "holds" : "violated")
                      << "\n";
        int cells = 0;
        for (const T2& a : inst.table.alpha)
            if (!a.is_zero()) ++cells;
        std::cout << "  table: rank " << inst.table.rank << ", " << cells << " nonzero cells\n";
        for (const AxiomReport& r : reports) {
            std::cout << "  " << axiom_name(r.axiom) << ": ";
            if (r.pass) {
                std::cout << "PASS\n";
            } else {
                std::cout << "FAIL on triple " << triple_str(r.failures.front()) << "\n";
            }
        }
        if (verify) std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_transform(const std::string& input, const std::string& basis, const std::string& expect,
                  bool json) {
    ProductTable T = table_from_json(load_json_file(input));
    BasisChange B = basis_change_from_json(load_json_file(basis), T.lie);
    ProductTable out = transform(T, B);

    bool checked = !expect.empty();
    bool pass = true;
    if (checked) pass = equivalent(out, table_from_json(load_json_file(expect)));

    if (json) {
        Json rep;
        rep["command"] = "transform";
        rep["input"] = input;
        rep["table"] = table_to_json(out);
        if (checked) rep["matches_expected"] = pass;
        print_json(rep);
    } else {
        int cells = 0;
        for (const T2& a : out.alpha)
            if (!a.is_zero()) ++cells;
        std::cout << "transform: " << input << " -> rank " << out.rank << ", " << cells
                  << " nonzero cells\n";
        if (checked) std::cout << "expected table: " << (pass ? "match" : "mismatch") << "\n";
    }
    return pass ? 0 : 1;
}

int run_solve(const std::string& equation, const std::string& lie_arg, const std::string& s_arg,
              const std::string& t_arg, const std::string& l_arg, const std::string& k_arg,
              int degree, const std::string& out_file, bool json) {
    EquationId id = parse_equation_id(equation);
    LiePtr lie = lie_from_arg(lie_arg);
    EqParams p;
    p.s = s_arg.empty() ? lie->zero_vector() : vector_from_arg(s_arg, lie);
    p.t = rat_from_string(t_arg);
    p.l = rat_from_string(l_arg);
    p.k = rat_from_string(k_arg);

    NullspaceResult ns = linear_nullspace(id, p, lie, degree);
    if (!out_file.empty()) write_json_file(out_file, nullspace_to_json(ns));
    if (json) {
        print_json(nullspace_to_json(ns));
    } else {
        std::cout << equation << " on " << lie->name() << ", degree <= " << degree
                  << ": kernel dimension " << ns.dimension() << " (" << ns.unknowns << " unknowns)\n";
    }
    return 0;
}

int run_verify(const std::string& suite, bool parallel, bool json) {
    if (suite != "full" && suite != "quick")
        throw MalformedInput("unknown suite '" + suite + "' (expected full or quick)");
    SuiteReport rep = run_classification_suite(suite == "full" ? SuiteMode::Full : SuiteMode::Quick,
                                               parallel);
    if (json) {
        print_json(suite_report_to_json(rep));
    } else {
        std::cout << render_text(rep);
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pseudoalgebra kernel over U(delta)"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of human-readable text");

    auto* check = app.add_subcommand("check", "run axiom checks on a product table");
    std::string check_input, check_axiom_name;
    bool check_all = false;
    check->add_option("--input", check_input, "product table JSON file")->required();
    check->add_option("--axiom", check_axiom_name, "assoc, left-prelie, or right-prelie");
    check->add_flag("--all", check_all, "check all three axioms");

    auto* cat = app.add_subcommand("catalog", "instantiate a classified family");
    std::string cat_entry, cat_lie, cat_params, cat_emit;
    bool cat_verify = false;
    cat->add_option("--entry", cat_entry, "entry id, e.g. thm3.6/3, cor3.12/ii, cur")->required();
    cat->add_option("--lie", cat_lie, "lie algebra JSON file or preset name")->required();
    cat->add_option("--params", cat_params, "parameter JSON file");
    cat->add_option("--emit", cat_emit, "write the instantiated table to this file");
    cat->add_flag("--verify", cat_verify, "check the entry's listed axioms");

    auto* tr = app.add_subcommand("transform", "rewrite a table in a new module basis");
    std::string tr_input, tr_basis, tr_expect;
    tr->add_option("--input", tr_input, "product table JSON file")->required();
    tr->add_option("--basis", tr_basis, "basis change JSON file with P and Pinv")->required();
    tr->add_option("--expect", tr_expect, "assert the result equals this table");

    auto* so = app.add_subcommand("solve", "bounded-degree kernel of a constraint equation");
    std::string so_eq, so_lie, so_s, so_t = "0", so_l = "0", so_k = "0", so_out;
    int so_degree = 0;
    so->add_option("--equation", so_eq, "equation id, e.g. eq3.8")->required();
    so->add_option("--lie", so_lie, "lie algebra JSON file or preset name")->required();
    so->add_option("--s", so_s, "vector parameter, e.g. \"[1,0]\"");
    so->add_option("--t", so_t, "scalar parameter");
    so->add_option("--l", so_l, "scalar parameter");
    so->add_option("--k", so_k, "scalar parameter");
    so->add_option("--degree", so_degree, "degree bound for the unknown")->required();
    so->add_option("--out", so_out, "write the kernel basis to this file");

    auto* ver = app.add_subcommand("verify-classification", "run the verification suite");
    std::string ver_suite = "full";
    bool ver_parallel = false;
    ver->add_option("--suite", ver_suite, "full or quick");
    ver->add_flag("--parallel", ver_parallel, "run suite items under OpenMP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (check->parsed()) code = run_check(check_input, check_axiom_name, check_all, json);
        if (cat->parsed()) code = run_catalog(cat_entry, cat_lie, cat_params, cat_emit, cat_verify, json);
        if (tr->parsed()) code = run_transform(tr_input, tr_basis, tr_expect, json);
        if (so->parsed()) code = run_solve(so_eq, so_lie, so_s, so_t, so_l, so_k, so_degree, so_out, json);
        if (ver->parsed()) code = run_verify(ver_suite, ver_parallel, json);
    } catch (const psalg::KernelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    std::cerr << "wall time: " << ms << " ms\n";
    return code;
}
