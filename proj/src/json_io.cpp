#include "psalg/json_io.hpp"

#include <fstream>

#include "psalg/errors.hpp"

namespace psalg {

namespace {

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(std::string("missing field '") + key + "'");
    return *it;
}

int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) throw MalformedInput(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

Int int_from_json(const Json& j, const char* key) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw MalformedInput(std::string("field '") + key + "' is not an integer");
        }
    }
    throw MalformedInput(std::string("field '") + key + "' must be an integer or a decimal string");
}

// Terms carry their coefficient as {"num": "...", "den": "..."} string fields.
void put_rat(Json& obj, const Rat& q) {
    obj["num"] = q.get_num().get_str();
    obj["den"] = q.get_den().get_str();
}

Rat rat_from_fields(const Json& obj) {
    Int num = int_from_json(need(obj, "num"), "num");
    Int den = obj.contains("den") ? int_from_json(obj["den"], "den") : Int(1);
    if (den == 0) throw MalformedInput("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

MultiIndex index_from_json(const Json& j, const LiePtr& lie, const char* key) {
    if (!j.is_array() || j.size() != static_cast<size_t>(lie->dim()))
        throw MalformedInput(std::string("field '") + key + "' must be an array of " +
                             std::to_string(lie->dim()) + " exponents");
    MultiIndex I = zero_index(lie->dim());
    for (size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_number_integer() || j[k].get<long long>() < 0)
            throw MalformedInput(std::string("field '") + key + "' must hold nonnegative integers");
        I[k] = j[k].get<uint32_t>();
    }
    return I;
}

Json index_to_json(const MultiIndex& I) {
    Json out = Json::array();
    for (uint32_t e : I) out.push_back(e);
    return out;
}

}  // namespace

Json rat_to_json(const Rat& q) {
    Json out;
    put_rat(out, q);
    return out;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return rat_from_string(std::to_string(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_object()) return rat_from_fields(j);
    throw MalformedInput("rational must be an integer, a \"p/q\" string, or {num, den}");
}

Json lie_to_json(const LieAlgebra& L) {
    Json out;
    out["dim"] = L.dim();
    Json bracket = Json::array();
    for (const BracketTerm& t : L.bracket_terms()) {
        Json term;
        term["i"] = t.i;
        term["j"] = t.j;
        term["k"] = t.k;
        put_rat(term, t.c);
        bracket.push_back(std::move(term));
    }
    out["bracket"] = std::move(bracket);
    out["name"] = L.name();
    return out;
}

LiePtr lie_from_json(const Json& j) {
    if (!j.is_object()) throw MalformedInput("lie algebra must be an object");
    const int dim = need_int(j, "dim");
    if (dim <= 0) throw MalformedInput("lie algebra dimension must be positive");
    std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string("custom");
    std::vector<BracketTerm> bracket;
    if (j.contains("bracket")) {
        const Json& arr = j["bracket"];
        if (!arr.is_array()) throw MalformedInput("field 'bracket' must be an array");
        for (const Json& term : arr) {
            BracketTerm t;
            t.i = need_int(term, "i");
            t.j = need_int(term, "j");
            t.k = need_int(term, "k");
            if (t.i < 0 || t.i >= dim || t.j < 0 || t.j >= dim || t.k < 0 || t.k >= dim)
                throw MalformedInput("bracket term index out of range");
            t.c = rat_from_fields(term);
            bracket.push_back(std::move(t));
        }
    }
    return std::make_shared<const LieAlgebra>(dim, bracket, std::move(name));
}

Json uel_to_json(const UEl& u) {
    Json out;
    out["basis"] = "divided-pbw";
    Json terms = Json::array();
    for (const auto& [I, c] : u.terms()) {
        Json term;
        term["index"] = index_to_json(I);
        put_rat(term, c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

UEl uel_from_json(const Json& j, const LiePtr& lie) {
    if (!j.is_object() || !j.contains("terms"))
        throw MalformedInput("element must be an object with a 'terms' array");
    if (j.contains("basis") && j["basis"] != "divided-pbw")
        throw MalformedInput("element basis must be \"divided-pbw\"");
    const Json& arr = j["terms"];
    if (!arr.is_array()) throw MalformedInput("field 'terms' must be an array");
    UEl u(lie);
    for (const Json& term : arr)
        u.add_term(index_from_json(need(term, "index"), lie, "index"), rat_from_fields(term));
    return u;
}

Json t2_to_json(const T2& a) {
    Json out;
    out["arity"] = 2;
    Json terms = Json::array();
    for (const auto& [key, c] : a.terms) {
        Json term;
        term["I"] = index_to_json(key.first);
        term["J"] = index_to_json(key.second);
        put_rat(term, c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

T2 t2_from_json(const Json& j, const LiePtr& lie) {
    if (!j.is_object() || !j.contains("terms"))
        throw MalformedInput("tensor must be an object with a 'terms' array");
    if (j.contains("arity") && j["arity"] != 2) throw MalformedInput("expected a tensor of arity 2");
    const Json& arr = j["terms"];
    if (!arr.is_array()) throw MalformedInput("field 'terms' must be an array");
    T2 a(lie);
    for (const Json& term : arr)
        a.add_term(index_from_json(need(term, "I"), lie, "I"),
                   index_from_json(need(term, "J"), lie, "J"), rat_from_fields(term));
    return a;
}

Json t3_to_json(const T3& a) {
    Json out;
    out["arity"] = 3;
    Json terms = Json::array();
    for (const auto& [key, c] : a.terms) {
        Json term;
        term["I"] = index_to_json(key[0]);
        term["J"] = index_to_json(key[1]);
        term["K"] = index_to_json(key[2]);
        put_rat(term, c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json table_to_json(const ProductTable& T) {
    Json out;
    out["rank"] = T.rank;
    out["lie"] = lie_to_json(*T.lie);
    Json alpha = Json::array();
    for (int i = 0; i < T.rank; ++i)
        for (int j = 0; j < T.rank; ++j)
            for (int k = 0; k < T.rank; ++k) {
                if (T.entry(i, j, k).is_zero()) continue;
                Json cell;
                cell["i"] = i;
                cell["j"] = j;
                cell["k"] = k;
                cell["t2"] = t2_to_json(T.entry(i, j, k));
                alpha.push_back(std::move(cell));
            }
    out["alpha"] = std::move(alpha);
    return out;
}

ProductTable table_from_json(const Json& j) {
    if (!j.is_object()) throw MalformedInput("table must be an object");
    LiePtr lie = lie_from_json(need(j, "lie"));
    const int rank = need_int(j, "rank");
    if (rank <= 0) throw MalformedInput("table rank must be positive");
    ProductTable T(lie, rank);
    const Json& alpha = need(j, "alpha");
    if (!alpha.is_array()) throw MalformedInput("field 'alpha' must be an array");
    for (const Json& cell : alpha) {
        const int i = need_int(cell, "i");
        const int jj = need_int(cell, "j");
        const int k = need_int(cell, "k");
        if (i < 0 || i >= rank || jj < 0 || jj >= rank || k < 0 || k >= rank)
            throw MalformedInput("table index out of range");
        T.entry(i, jj, k) = t2_from_json(need(cell, "t2"), lie);
    }
    return T;
}

Json pseudo3_to_json(const PseudoEl3& x) {
    Json out;
    out["rank"] = x.rank;
    Json terms = Json::array();
    for (const auto& [key, c] : x.terms) {
        Json term;
        term["I1"] = index_to_json(std::get<0>(key));
        term["I2"] = index_to_json(std::get<1>(key));
        term["J"] = index_to_json(std::get<2>(key));
        term["k"] = std::get<3>(key);
        put_rat(term, c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

// Parameter files are flat: {"s1": [...], "t1": "...", "g": {element}, "alpha": "t"}.
// The kind of each entry is inferred from its JSON shape; a string is a scalar
// when it parses as a rational and a choice name otherwise.
Params params_from_json(const Json& j, const LiePtr& lie) {
    if (!j.is_object()) throw MalformedInput("params must be an object");
    Params p;
    for (const auto& [name, v] : j.items()) {
        if (v.is_array()) {
            if (v.size() != static_cast<size_t>(lie->dim()))
                throw MalformedInput("vector '" + name + "' must be an array of " +
                                     std::to_string(lie->dim()) + " rationals");
            DeltaVector vec = lie->zero_vector();
            for (size_t k = 0; k < v.size(); ++k) vec[k] = rat_from_json(v[k]);
            p.vectors[name] = std::move(vec);
        } else if (v.is_object() && v.contains("terms")) {
            p.elements.emplace(name, uel_from_json(v, lie));
        } else if (v.is_number_integer() || (v.is_object() && v.contains("num"))) {
            p.scalars[name] = rat_from_json(v);
        } else if (v.is_string()) {
            try {
                p.scalars[name] = rat_from_string(v.get<std::string>());
            } catch (const MalformedInput&) {
                p.choices[name] = v.get<std::string>();
            }
        } else {
            throw MalformedInput("parameter '" + name + "' has an unrecognized shape");
        }
    }
    return p;
}

Json params_to_json(const Params& p) {
    Json out = Json::object();
    for (const auto& [name, v] : p.scalars) out[name] = rat_to_string(v);
    for (const auto& [name, v] : p.vectors) {
        Json arr = Json::array();
        for (const Rat& c : v) arr.push_back(rat_to_string(c));
        out[name] = std::move(arr);
    }
    for (const auto& [name, v] : p.elements) out[name] = uel_to_json(v);
    for (const auto& [name, v] : p.choices) out[name] = v;
    return out;
}

namespace {

// Matrix entries may be written as a full element object or as a bare
// rational shorthand for a constant.
UEl matrix_entry_from_json(const Json& j, const LiePtr& lie) {
    if (j.is_object() && j.contains("terms")) return uel_from_json(j, lie);
    return UEl::one(lie) * rat_from_json(j);
}

std::vector<std::vector<UEl>> matrix_from_json(const Json& j, const LiePtr& lie, int rank,
                                               const char* key) {
    if (!j.is_array() || j.size() != static_cast<size_t>(rank))
        throw MalformedInput(std::string("field '") + key + "' must be a " + std::to_string(rank) +
                             "x" + std::to_string(rank) + " matrix");
    std::vector<std::vector<UEl>> m;
    for (const Json& row : j) {
        if (!row.is_array() || row.size() != static_cast<size_t>(rank))
            throw MalformedInput(std::string("field '") + key + "' must be a " + std::to_string(rank) +
                                 "x" + std::to_string(rank) + " matrix");
        std::vector<UEl> r;
        for (const Json& cell : row) r.push_back(matrix_entry_from_json(cell, lie));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

BasisChange basis_change_from_json(const Json& j, const LiePtr& lie) {
    if (!j.is_object()) throw MalformedInput("basis change must be an object");
    const Json& P = need(j, "P");
    if (!P.is_array() || P.empty()) throw MalformedInput("field 'P' must be a nonempty matrix");
    const int rank = static_cast<int>(P.size());
    BasisChange B;
    B.lie = lie;
    B.rank = rank;
    B.P = matrix_from_json(P, lie, rank, "P");
    B.Pinv = matrix_from_json(need(j, "Pinv"), lie, rank, "Pinv");
    return B;
}

Json axiom_report_to_json(const AxiomReport& r) {
    Json out;
    out["axiom"] = axiom_name(r.axiom);
    out["pass"] = r.pass;
    Json failures = Json::array();
    for (const TripleFailure& f : r.failures) {
        Json fail;
        fail["i"] = f.i;
        fail["j"] = f.j;
        fail["k"] = f.k;
        fail["defect"] = pseudo3_to_json(f.defect);
        failures.push_back(std::move(fail));
    }
    out["failures"] = std::move(failures);
    return out;
}

Json nullspace_to_json(const NullspaceResult& r) {
    Json out;
    out["equation"] = equation_id_name(r.id);
    out["max_degree"] = r.max_degree;
    out["unknowns"] = r.unknowns;
    out["dimension"] = r.dimension();
    Json basis = Json::array();
    for (const T2& v : r.basis) basis.push_back(t2_to_json(v));
    out["basis"] = std::move(basis);
    return out;
}

Json suite_report_to_json(const SuiteReport& r) {
    Json out;
    out["mode"] = (r.mode == SuiteMode::Full ? "full" : "quick");
    out["parallel"] = r.parallel;
    out["pass"] = r.pass;
    Json flags = Json::array();
    for (const std::string& f : r.flags) flags.push_back(f);
    out["flags"] = std::move(flags);
    Json groups = Json::array();
    for (const SuiteGroupSummary& g : r.groups) {
        Json grp;
        grp["group"] = g.group;
        grp["heading"] = g.heading;
        grp["passed"] = g.passed;
        grp["total"] = g.total;
        groups.push_back(std::move(grp));
    }
    out["groups"] = std::move(groups);
    Json items = Json::array();
    for (const SuiteItemResult& it : r.items) {
        Json item;
        item["group"] = it.group;
        item["id"] = it.id;
        item["pass"] = it.pass;
        item["detail"] = it.detail;
        Json ifl = Json::array();
        for (const std::string& f : it.flags) ifl.push_back(f);
        item["flags"] = std::move(ifl);
        items.push_back(std::move(item));
    }
    out["items"] = std::move(items);
    return out;
}

Json instantiated_to_json(const Instantiated& inst, const std::string& entry_id) {
    Json out;
    out["entry"] = entry_id;
    Json conds = Json::array();
    for (const SideConditionResult& c : inst.conditions) {
        Json cond;
        cond["condition"] = c.description;
        cond["holds"] = c.holds;
        conds.push_back(std::move(cond));
    }
    out["conditions"] = std::move(conds);
    out["all_conditions_hold"] = inst.all_conditions_hold;
    out["table"] = table_to_json(inst.table);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace psalg
