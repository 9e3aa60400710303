#include "ratmle/json_io.hpp"

#include <fstream>

namespace ratmle {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad(std::string(what) + " entries must be integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Rational rational_field(const Json& j, const char* what) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        bad(std::string(what) + ": " + e.what());
    }
    bad(std::string(what) + " must be an integer or a \"p/q\" string");
}

std::vector<std::string> default_var_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

}  // namespace

Json poly_to_json(const SparsePoly& p, std::vector<std::string> var_names) {
    if (var_names.empty()) var_names = default_var_names(p.nvars());
    if (var_names.size() != p.nvars()) bad("variable name count does not match the polynomial");
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"c", to_string(c)}, {"e", m.exponents}});
    return {{"vars", var_names}, {"terms", terms}};
}

SparsePoly poly_from_json(const Json& j) {
    const Json& vars = field(j, "vars");
    if (!vars.is_array()) bad("\"vars\" must be an array");
    std::size_t nvars = vars.size();
    const Json& jterms = field(j, "terms");
    if (!jterms.is_array()) bad("\"terms\" must be an array");
    std::vector<SparsePoly::Term> terms;
    for (const auto& jt : jterms) {
        Rational c = rational_field(field(jt, "c"), "coefficient");
        std::vector<int> e = int_vector(field(jt, "e"), "exponent vector");
        if (e.size() != nvars) bad("exponent vector length does not match \"vars\"");
        terms.push_back({Monomial(std::move(e)), std::move(c)});
    }
    return SparsePoly::from_terms(nvars, std::move(terms));
}

Json horn_pair_to_json(const HornPair& pair) {
    Json h = Json::array();
    for (const auto& row : pair.H.entries) {
        Json r = Json::array();
        for (const auto& x : row) {
            if (!x.fits_slong_p()) bad("matrix entry out of the serializable range");
            r.push_back(x.get_si());
        }
        h.push_back(std::move(r));
    }
    Json lambda = Json::array();
    for (const auto& l : pair.lambda) lambda.push_back(to_string(l));
    Json out{{"H", h}, {"lambda", lambda}};
    if (!pair.H.row_labels.empty()) out["row_labels"] = pair.H.row_labels;
    return out;
}

HornPair horn_pair_from_json(const Json& j) {
    HornPair pair;
    const Json& h = field(j, "H");
    if (!h.is_array() || h.empty()) bad("\"H\" must be a nonempty array of rows");
    std::size_t cols = 0;
    for (const auto& jrow : h) {
        std::vector<int> row = int_vector(jrow, "matrix row");
        if (pair.H.entries.empty())
            cols = row.size();
        else if (row.size() != cols)
            bad("matrix rows have unequal lengths");
        std::vector<Integer> irow;
        irow.reserve(row.size());
        for (int x : row) irow.emplace_back(x);
        pair.H.entries.push_back(std::move(irow));
    }
    const Json& lambda = field(j, "lambda");
    if (!lambda.is_array()) bad("\"lambda\" must be an array");
    for (const auto& jl : lambda) pair.lambda.push_back(rational_field(jl, "lambda entry"));
    if (j.contains("row_labels")) {
        const Json& labels = j.at("row_labels");
        if (!labels.is_array()) bad("\"row_labels\" must be an array");
        for (const auto& l : labels) {
            if (!l.is_string()) bad("row labels must be strings");
            pair.H.row_labels.push_back(l.get<std::string>());
        }
        if (pair.H.row_labels.size() != pair.H.rows())
            bad("row label count does not match the matrix");
    }
    return pair;
}

Json horn_verdict_to_json(const HornVerdict& v) {
    return {{"friendly", v.friendly}, {"horn", v.horn}, {"sigma", v.sigma}};
}

Json tree_to_json(const StagedTree& t) {
    Json edges = Json::array();
    for (const auto& e : t.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
    return {{"nodes", t.nodes}, {"edges", edges}};
}

StagedTree tree_from_json(const Json& j) {
    StagedTree t;
    const Json& nodes = field(j, "nodes");
    if (!nodes.is_array()) bad("\"nodes\" must be an array");
    for (const auto& n : nodes) {
        if (!n.is_string()) bad("node names must be strings");
        t.nodes.push_back(n.get<std::string>());
    }
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) bad("\"edges\" must be an array");
    for (const auto& je : edges) {
        StagedTree::Edge e;
        for (auto [key, dst] : {std::pair<const char*, std::string*>{"from", &e.from},
                                {"to", &e.to},
                                {"label", &e.label}}) {
            const Json& v = field(je, key);
            if (!v.is_string()) bad(std::string("edge \"") + key + "\" must be a string");
            *dst = v.get<std::string>();
        }
        t.edges.push_back(std::move(e));
    }
    return t;
}

Json table_to_json(const ContingencyTable& t) {
    Json counts = Json::array();
    for (const auto& c : t.counts) counts.push_back(to_string(c));
    return {{"dims", t.dims}, {"counts", counts}};
}

ContingencyTable table_from_json(const Json& j) {
    ContingencyTable t;
    const Json& dims = field(j, "dims");
    if (!dims.is_array()) bad("\"dims\" must be an array");
    for (const auto& d : dims) {
        if (!d.is_number_integer() || d.get<long>() <= 0) bad("dims must be positive integers");
        t.dims.push_back(d.get<std::size_t>());
    }
    const Json& counts = field(j, "counts");
    if (!counts.is_array()) bad("\"counts\" must be an array");
    for (const auto& c : counts) t.counts.push_back(rational_field(c, "count"));
    t.validate();
    return t;
}

Json triple_to_json(const IntMatrix& a, const MarkedPoly& mp) {
    Json ja = Json::array();
    for (const auto& row : a) {
        Json r = Json::array();
        for (const auto& x : row) {
            if (!x.fits_slong_p()) bad("matrix entry out of the serializable range");
            r.push_back(x.get_si());
        }
        ja.push_back(std::move(r));
    }
    return {{"A", ja},
            {"delta", poly_to_json(mp.delta)},
            {"marked_term_index", mp.marked_index}};
}

std::pair<IntMatrix, MarkedPoly> triple_from_json(const Json& j) {
    IntMatrix a;
    const Json& ja = field(j, "A");
    if (!ja.is_array() || ja.empty()) bad("\"A\" must be a nonempty array of rows");
    std::size_t cols = 0;
    for (const auto& jrow : ja) {
        std::vector<int> row = int_vector(jrow, "matrix row");
        if (a.empty())
            cols = row.size();
        else if (row.size() != cols)
            bad("matrix rows have unequal lengths");
        std::vector<Integer> irow;
        irow.reserve(row.size());
        for (int x : row) irow.emplace_back(x);
        a.push_back(std::move(irow));
    }
    MarkedPoly mp;
    mp.delta = poly_from_json(field(j, "delta"));
    const Json& idx = field(j, "marked_term_index");
    if (!idx.is_number_integer() || idx.get<long>() < 0)
        bad("\"marked_term_index\" must be a nonnegative integer");
    mp.marked_index = idx.get<std::size_t>();
    if (mp.marked_index >= mp.delta.term_count())
        bad("\"marked_term_index\" exceeds the term count");
    return {std::move(a), std::move(mp)};
}

Json model_record_to_json(const ModelRecord& rec, const SparsePoly& delta) {
    return {{"term_index", rec.term_index},
            {"marked_term", poly_to_json(SparsePoly(delta.terms()[rec.term_index].first,
                                                    delta.terms()[rec.term_index].second))},
            {"pair", horn_pair_to_json(rec.pair)},
            {"sigma", rec.sigma}};
}

Json verify_report_to_json(const VerifyReport& rep) {
    return {{"seed", rep.seed},
            {"trials", rep.trials},
            {"failures", rep.messages},
            {"ok", rep.ok()}};
}

std::string rational_display(const Rational& q) {
    return to_string(q) + " (" + to_decimal(q) + ")";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        bad(path + ": " + e.what());
    }
    return j;
}

}  // namespace ratmle
