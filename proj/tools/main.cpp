// Command-line surface for the ratmle library: staged trees, Horn pairs,
// discriminantal triples, discriminant computations, family scans, and
// likelihood verification.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <condition_variable>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ratmle/families.hpp"
#include "ratmle/json_io.hpp"
#include "ratmle/resultant.hpp"

namespace {

using namespace ratmle;

enum class Format { json, table };

struct FormatFlag {
    std::string value = "table";
    Format get() const {
        if (value == "json") return Format::json;
        if (value == "table") return Format::table;
        throw std::invalid_argument("unknown format: " + value);
    }
};

void add_format_flag(CLI::App* cmd, FormatFlag& f) {
    cmd->add_option("--format", f.value, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
}

std::vector<Rational> parse_counts(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty count vector");
    return out;
}

std::vector<std::string> parse_labels(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string vector_display(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rational_display(v[i]);
    }
    return s + ")";
}

Json rational_vector_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

void print_rational_vector(Format fmt, const std::string& name,
                           const std::vector<Rational>& v) {
    if (fmt == Format::json)
        std::cout << Json{{name, rational_vector_json(v)}}.dump() << "\n";
    else
        std::cout << name << " = " << vector_display(v) << "\n";
}

void print_pair(Format fmt, const HornPair& pair) {
    if (fmt == Format::json) {
        std::cout << horn_pair_to_json(pair).dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < pair.H.rows(); ++i) {
        if (!pair.H.row_labels.empty())
            std::cout << pair.H.row_labels[i] << ":";
        for (const auto& x : pair.H.entries[i]) std::cout << " " << x;
        std::cout << "\n";
    }
    std::cout << "lambda =";
    for (const auto& l : pair.lambda) std::cout << " " << rational_display(l);
    std::cout << "\n";
}

// Two-decimal percentage via integer rounding; display only.
std::string percent_string(std::size_t part, std::size_t whole) {
    if (whole == 0) return "0.00";
    unsigned long long scaled =
        (static_cast<unsigned long long>(part) * 20000ULL + whole) / (2ULL * whole);
    std::ostringstream os;
    os << scaled / 100 << "." << (scaled % 100 < 10 ? "0" : "") << scaled % 100;
    return os.str();
}

// ---------------------------------------------------------------------------
// Scan orchestration: a worker pool over per-instance jobs with incremental,
// deterministic (instance-index-ordered) checkpoint output.

struct ScanJobSpec {
    std::string label;
    std::function<FamilyInstance()> compute;
};

struct InstanceResult {
    std::string label;
    std::vector<long> params;
    std::size_t n_terms = 0;
    std::size_t n_models = 0;
    Json record;  // full NDJSON record
};

InstanceResult result_from_instance(const FamilyInstance& inst) {
    InstanceResult r;
    r.label = inst.label;
    r.params = inst.params;
    r.n_terms = inst.n_terms();
    r.n_models = inst.models.size();
    Json models = Json::array();
    for (const auto& m : inst.models) models.push_back(model_record_to_json(m, inst.delta));
    r.record = {{"label", inst.label},
                {"params", inst.params},
                {"terms", r.n_terms},
                {"models", models}};
    return r;
}

InstanceResult result_from_record(const Json& rec) {
    InstanceResult r;
    r.label = rec.at("label").get<std::string>();
    if (rec.contains("params")) r.params = rec.at("params").get<std::vector<long>>();
    r.n_terms = rec.at("terms").get<std::size_t>();
    r.n_models = rec.at("models").size();
    r.record = rec;
    return r;
}

int run_scan(const std::vector<ScanJobSpec>& specs, std::size_t jobs, Format fmt,
             const std::string& resume_path, const std::string& summary_noun) {
    std::map<std::string, Json> done;
    if (!resume_path.empty()) {
        std::ifstream in(resume_path);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            Json rec = Json::parse(line, nullptr, false);
            if (rec.is_discarded() || !rec.contains("label"))
                throw std::invalid_argument("corrupt checkpoint line in " + resume_path);
            done[rec.at("label").get<std::string>()] = rec;
        }
    }
    std::ofstream checkpoint;
    if (!resume_path.empty()) {
        checkpoint.open(resume_path, std::ios::app);
        if (!checkpoint) throw std::invalid_argument("cannot open checkpoint: " + resume_path);
    }

    std::size_t n = specs.size();
    std::vector<InstanceResult> results(n);
    std::vector<char> ready(n, 0);
    std::mutex mu;
    std::condition_variable cv;
    std::size_t next_job = 0;

    auto worker = [&] {
        while (true) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next_job >= n) return;
                i = next_job++;
            }
            InstanceResult r;
            auto it = done.find(specs[i].label);
            if (it != done.end())
                r = result_from_record(it->second);
            else
                r = result_from_instance(specs[i].compute());
            {
                std::lock_guard<std::mutex> lock(mu);
                results[i] = std::move(r);
                ready[i] = 1;
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::max<std::size_t>(jobs, 1); ++w) pool.emplace_back(worker);

    // Flush results in instance order as they complete.
    std::size_t total_terms = 0, total_models = 0;
    for (std::size_t i = 0; i < n; ++i) {
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return ready[i] != 0; });
        }
        const InstanceResult& r = results[i];
        total_terms += r.n_terms;
        total_models += r.n_models;
        if (checkpoint.is_open() && !done.count(r.label)) {
            checkpoint << r.record.dump() << "\n";
            checkpoint.flush();
        }
        if (fmt == Format::json) std::cout << r.record.dump() << "\n";
    }
    for (auto& t : pool) t.join();

    if (fmt == Format::json) {
        Json summary{{"instances", n},
                     {"terms", total_terms},
                     {"models", total_models},
                     {"fraction", std::to_string(total_models) + "/" + std::to_string(total_terms)},
                     {"percent", percent_string(total_models, total_terms)}};
        std::cout << Json{{"summary", summary}}.dump() << "\n";
    } else {
        // Per-degree breakdown when the labels carry a multiplier degree
        // (the linear-multiples table); otherwise a single summary line.
        std::map<long, std::pair<std::size_t, std::size_t>> by_degree;
        bool degrees = !specs.empty() && !results[0].params.empty() &&
                       summary_noun == std::string("multipliers");
        if (degrees) {
            for (const auto& r : results) {
                long d = 0;
                for (std::size_t k = 0; k < 4 && k < r.params.size(); ++k) d += r.params[k];
                by_degree[d].first += r.n_terms;
                by_degree[d].second += r.n_models;
            }
            std::cout << "degree  pairs  horn\n";
            for (const auto& [d, tm] : by_degree)
                std::cout << d << "  " << tm.first << "  " << tm.second << "\n";
        }
        std::cout << n << " " << summary_noun << ", " << total_terms << " pairs, "
                  << total_models << " triples (" << percent_string(total_models, total_terms)
                  << "%)\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"Exact rational-MLE toolkit: staged trees, Horn pairs, "
                 "discriminantal triples, and discriminant family scans"};
    app.require_subcommand(1);

    // Shared option storage. Each subcommand binds the fields it uses.
    std::string path1, path2, counts_arg, resume_path;
    std::string floret_arg, merge_arg;
    std::vector<long> exponents;
    FormatFlag fmt;
    long bound = 17;
    std::size_t jobs = 1;
    std::uint64_t seed = 2024;
    std::size_t trials = 200;
    std::string shape_arg = "binomial", sign_arg = "minus";

    int exit_code = 0;

    // -------------------------------------------------- tree
    CLI::App* tree = app.add_subcommand("tree", "Staged-tree models");
    tree->require_subcommand(1);

    CLI::App* cmd_tree_validate = tree->add_subcommand("validate", "Check staged-tree invariants");
    cmd_tree_validate->add_option("tree", path1, "Tree JSON file")->required();
    add_format_flag(cmd_tree_validate, fmt);
    cmd_tree_validate->callback([&] {
        StagedTree t = tree_from_json(load_json_file(path1));
        auto violations = ratmle::tree_validate(t);
        if (fmt.get() == Format::json)
            std::cout << Json{{"valid", violations.empty()}, {"violations", violations}}.dump()
                      << "\n";
        else
            for (const auto& v : violations) std::cout << v << "\n";
        if (!violations.empty()) exit_code = 1;
    });

    CLI::App* cmd_tree_mle = tree->add_subcommand("mle", "Closed-form MLE from counts");
    cmd_tree_mle->add_option("tree", path1, "Tree JSON file")->required();
    cmd_tree_mle->add_option("--counts", counts_arg, "Comma-separated leaf counts")->required();
    add_format_flag(cmd_tree_mle, fmt);
    cmd_tree_mle->callback([&] {
        TreeStructure ts = compile_tree(tree_from_json(load_json_file(path1)));
        TreeMLE mle = ratmle::tree_mle(ts, parse_counts(counts_arg));
        if (fmt.get() == Format::json) {
            std::cout << Json{{"s", rational_vector_json(mle.s)},
                              {"p", rational_vector_json(mle.p)},
                              {"stages", ts.stage_labels},
                              {"leaves", ts.leaf_names}}
                             .dump()
                      << "\n";
        } else {
            print_rational_vector(Format::table, "s", mle.s);
            print_rational_vector(Format::table, "p", mle.p);
        }
    });

    CLI::App* cmd_tree_horn = tree->add_subcommand("horn", "Horn pair of a staged tree");
    cmd_tree_horn->add_option("tree", path1, "Tree JSON file")->required();
    add_format_flag(cmd_tree_horn, fmt);
    cmd_tree_horn->callback([&] {
        TreeStructure ts = compile_tree(tree_from_json(load_json_file(path1)));
        print_pair(fmt.get(), ratmle::tree_horn(ts));
    });

    CLI::App* cmd_tree_equiv = tree->add_subcommand("equiv", "Statistical equivalence of two trees");
    cmd_tree_equiv->add_option("tree1", path1, "First tree JSON file")->required();
    cmd_tree_equiv->add_option("tree2", path2, "Second tree JSON file")->required();
    add_format_flag(cmd_tree_equiv, fmt);
    cmd_tree_equiv->callback([&] {
        bool eq = tree_equivalent(tree_from_json(load_json_file(path1)),
                                  tree_from_json(load_json_file(path2)));
        if (fmt.get() == Format::json)
            std::cout << Json{{"equivalent", eq}}.dump() << "\n";
        else
            std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
        if (!eq) exit_code = 1;
    });

    CLI::App* cmd_tree_identify = tree->add_subcommand("identify", "Merge two florets by relabeling");
    cmd_tree_identify->add_option("tree", path1, "Tree JSON file")->required();
    cmd_tree_identify->add_option("--floret", floret_arg, "Labels of the floret to keep")->required();
    cmd_tree_identify->add_option("--merge", merge_arg, "Labels of the floret to merge, aligned")
        ->required();
    cmd_tree_identify->callback([&] {
        StagedTree t = tree_from_json(load_json_file(path1));
        StagedTree merged = identify_florets(t, parse_labels(floret_arg),
                                             parse_labels(merge_arg));
        std::cout << tree_to_json(merged).dump(2) << "\n";
    });

    // -------------------------------------------------- horn
    CLI::App* horn = app.add_subcommand("horn", "Horn pairs and the Horn map");
    horn->require_subcommand(1);

    CLI::App* cmd_horn_check = horn->add_subcommand("check", "Friendliness and Horn verdict");
    cmd_horn_check->add_option("pair", path1, "Horn pair JSON file")->required();
    add_format_flag(cmd_horn_check, fmt);
    cmd_horn_check->callback([&] {
        HornPair pair = horn_pair_from_json(load_json_file(path1));
        HornVerdict v = horn_pair_check(pair);
        if (fmt.get() == Format::json)
            std::cout << horn_verdict_to_json(v).dump() << "\n";
        else
            std::cout << "friendly: " << (v.friendly ? "yes" : "no")
                      << "\nhorn: " << (v.horn ? "yes" : "no") << "\n";
        if (!v.horn) exit_code = 1;
    });

    CLI::App* cmd_horn_eval = horn->add_subcommand("eval", "Evaluate the Horn map at counts");
    cmd_horn_eval->add_option("pair", path1, "Horn pair JSON file")->required();
    cmd_horn_eval->add_option("--counts", counts_arg, "Comma-separated counts")->required();
    add_format_flag(cmd_horn_eval, fmt);
    cmd_horn_eval->callback([&] {
        HornPair pair = horn_pair_from_json(load_json_file(path1));
        print_rational_vector(fmt.get(), "p", horn_map_eval(pair, parse_counts(counts_arg)));
    });

    CLI::App* cmd_horn_reduce = horn->add_subcommand("reduce", "Aggregate collinear rows");
    cmd_horn_reduce->add_option("pair", path1, "Horn pair JSON file")->required();
    add_format_flag(cmd_horn_reduce, fmt);
    cmd_horn_reduce->callback([&] {
        print_pair(fmt.get(), reduce_horn(horn_pair_from_json(load_json_file(path1))));
    });

    CLI::App* cmd_horn_equal = horn->add_subcommand("equal", "Equality of two pairs");
    cmd_horn_equal->add_option("pair1", path1, "First Horn pair JSON file")->required();
    cmd_horn_equal->add_option("pair2", path2, "Second Horn pair JSON file")->required();
    add_format_flag(cmd_horn_equal, fmt);
    cmd_horn_equal->callback([&] {
        bool eq = horn_pair_equal(horn_pair_from_json(load_json_file(path1)),
                                  horn_pair_from_json(load_json_file(path2)));
        if (fmt.get() == Format::json)
            std::cout << Json{{"equal", eq}}.dump() << "\n";
        else
            std::cout << (eq ? "equal" : "not equal") << "\n";
        if (!eq) exit_code = 1;
    });

    // -------------------------------------------------- triple
    CLI::App* triple = app.add_subcommand("triple", "Discriminantal triples");
    triple->require_subcommand(1);

    CLI::App* triple_check_cmd = triple->add_subcommand("check", "Verify a candidate triple");
    triple_check_cmd->add_option("triple", path1, "Triple JSON file")->required();
    add_format_flag(triple_check_cmd, fmt);
    triple_check_cmd->callback([&] {
        auto [a, mp] = triple_from_json(load_json_file(path1));
        TripleVerdict v = triple_check(a, mp);
        if (fmt.get() == Format::json)
            std::cout << Json{{"a_homogeneous", v.a_homogeneous},
                              {"reduced", v.reduced},
                              {"constant_row_signs", v.constant_row_signs},
                              {"positive", v.positive},
                              {"ok", v.ok},
                              {"sigma", v.sigma}}
                             .dump()
                      << "\n";
        else
            std::cout << "a_homogeneous: " << v.a_homogeneous << "\nreduced: " << v.reduced
                      << "\nconstant_row_signs: " << v.constant_row_signs
                      << "\npositive: " << v.positive << "\nok: " << v.ok << "\n";
        if (!v.ok) exit_code = 1;
    });

    CLI::App* triple_from_pair = triple->add_subcommand("from-pair", "Marked polynomial of a pair");
    triple_from_pair->add_option("pair", path1, "Horn pair JSON file")->required();
    triple_from_pair->callback([&] {
        HornPair pair = horn_pair_from_json(load_json_file(path1));
        MarkedPoly mp = marked_poly_from_pair(pair);
        IntMatrix a = left_kernel_basis(pair.H);
        std::cout << triple_to_json(a, mp).dump(2) << "\n";
    });

    CLI::App* triple_to_pair = triple->add_subcommand("to-pair", "Horn pair of a marked polynomial");
    triple_to_pair->add_option("triple", path1, "Triple JSON file")->required();
    triple_to_pair->callback([&] {
        auto [a, mp] = triple_from_json(load_json_file(path1));
        validate_toric(a);
        std::cout << horn_pair_to_json(pair_from_marked_poly(mp)).dump(2) << "\n";
    });

    // -------------------------------------------------- disc
    CLI::App* disc = app.add_subcommand("disc", "Discriminants and resultants");
    disc->require_subcommand(1);

    CLI::App* disc_uni = disc->add_subcommand(
        "univariate", "Discriminant of x1 + x2 t^a + x3 t^b + x4 t^c");
    disc_uni->add_option("exponents", exponents, "Exponents a b c")->expected(3);
    disc_uni->callback([&] {
        if (!(0 < exponents[0] && exponents[0] < exponents[1] && exponents[1] < exponents[2]))
            throw std::invalid_argument("exponents must satisfy 0 < a < b < c");
        std::cout << poly_to_json(univariate_instance(exponents[0], exponents[1], exponents[2])
                                      .delta)
                         .dump(2)
                  << "\n";
    });

    CLI::App* disc_tri = disc->add_subcommand(
        "trinomial", "Resultant of x1 + x2 t^a + x3 t^b and x4 + x5 t^c + x6 t^e");
    disc_tri->add_option("exponents", exponents, "Exponents a b c e")->expected(4);
    disc_tri->callback([&] {
        if (!(0 < exponents[0] && exponents[0] < exponents[1] && 0 < exponents[2] &&
              exponents[2] < exponents[3]))
            throw std::invalid_argument("exponents must satisfy 0 < a < b and 0 < c < e");
        std::cout << poly_to_json(trinomial_instance(exponents[0], exponents[1], exponents[2],
                                                     exponents[3])
                                      .delta)
                         .dump(2)
                  << "\n";
    });

    // -------------------------------------------------- scan
    CLI::App* scan = app.add_subcommand("scan", "Family scans for discriminantal triples");
    scan->require_subcommand(1);

    auto add_scan_flags = [&](CLI::App* cmd) {
        cmd->add_option("--bound", bound, "Family size bound");
        cmd->add_option("--jobs", jobs, "Worker count");
        cmd->add_option("--resume", resume_path, "NDJSON checkpoint file");
        add_format_flag(cmd, fmt);
    };

    CLI::App* scan_uni = scan->add_subcommand("univariate", "Univariate discriminant family");
    add_scan_flags(scan_uni);
    scan_uni->callback([&] {
        std::vector<ScanJobSpec> specs;
        for (const auto& t : univariate_params(bound)) {
            std::ostringstream label;
            label << "univariate(" << t[0] << "," << t[1] << "," << t[2] << ")";
            specs.push_back({label.str(),
                             [t] { return univariate_instance(t[0], t[1], t[2]); }});
        }
        exit_code = run_scan(specs, jobs, fmt.get(), resume_path, "matrices");
    });

    CLI::App* scan_tri = scan->add_subcommand("trinomial", "Trinomial resultant family");
    add_scan_flags(scan_tri);
    scan_tri->callback([&] {
        std::vector<ScanJobSpec> specs;
        for (const auto& t : trinomial_params(bound)) {
            std::ostringstream label;
            label << "trinomial(" << t[0] << "," << t[1] << ";" << t[2] << "," << t[3] << ")";
            specs.push_back({label.str(),
                             [t] { return trinomial_instance(t[0], t[1], t[2], t[3]); }});
        }
        exit_code = run_scan(specs, jobs, fmt.get(), resume_path, "matrices");
    });

    CLI::App* scan_lm = scan->add_subcommand("linear-multiples",
                                             "Multiples of the linear form x1+x2+x3+x4");
    add_scan_flags(scan_lm);
    scan_lm->add_option("--shape", shape_arg, "binomial or trinomial")
        ->check(CLI::IsMember({"binomial", "trinomial"}));
    scan_lm->add_option("--sign", sign_arg, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    scan_lm->callback([&] {
        MultiplierShape shape =
            shape_arg == "binomial" ? MultiplierShape::binomial : MultiplierShape::trinomial;
        MultiplierSign sign = sign_arg == "plus" ? MultiplierSign::plus : MultiplierSign::minus;
        long max_degree = bound;
        if (max_degree == 17)  // default bound is family-specific
            max_degree = shape == MultiplierShape::binomial ? 8 : 3;
        auto insts = linear_multiple_instances(shape, sign, max_degree);
        std::vector<ScanJobSpec> specs;
        for (auto& inst : insts) {
            auto shared = std::make_shared<FamilyInstance>(std::move(inst));
            specs.push_back({shared->label, [shared] {
                                 FamilyInstance done = *shared;
                                 done.models = algorithm1_scan(done.a, done.delta);
                                 return done;
                             }});
        }
        exit_code = run_scan(specs, jobs, fmt.get(), resume_path, "multipliers");
    });

    // -------------------------------------------------- verify
    CLI::App* verify = app.add_subcommand("verify", "Likelihood-side verification");
    verify->require_subcommand(1);

    CLI::App* verify_model_cmd = verify->add_subcommand("model", "Verify a Horn-pair model");
    verify_model_cmd->add_option("pair", path1, "Horn pair JSON file")->required();
    verify_model_cmd->add_option("--seed", seed, "PRNG seed recorded in the report");
    verify_model_cmd->add_option("--trials", trials, "Number of sampled count vectors");
    add_format_flag(verify_model_cmd, fmt);
    verify_model_cmd->callback([&] {
        HornPair pair = horn_pair_from_json(load_json_file(path1));
        VerifyReport rep = verify_model(pair, seed, trials);
        if (fmt.get() == Format::json)
            std::cout << verify_report_to_json(rep).dump() << "\n";
        else {
            std::cout << "seed " << rep.seed << ", trials " << rep.trials << ", failures "
                      << rep.failures << "\n";
            for (const auto& m : rep.messages) std::cout << "  " << m << "\n";
        }
        if (!rep.ok()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
