#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freevl/freevl.hpp"

namespace {

using namespace freevl;

nlohmann::json vector_json(const Vector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(to_string(v[i]));
    return out;
}

void print_verdict(bool verdict, const std::optional<Vector>& witness, bool want_witness,
                   bool as_json) {
    if (as_json) {
        nlohmann::json doc;
        doc["verdict"] = verdict;
        if (want_witness) {
            doc["witness"] = witness ? vector_json(*witness) : nlohmann::json(nullptr);
        }
        std::cout << doc.dump() << "\n";
        return;
    }
    std::cout << (verdict ? "true" : "false") << "\n";
    if (want_witness && witness) {
        std::cout << vector_json(*witness).dump() << "\n";
    }
}

void print_value(const std::string& value, bool as_json) {
    if (as_json) {
        nlohmann::json doc;
        doc["value"] = value;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
}

PolyhedralBall make_ball(const std::string& spec, std::size_t dim) {
    if (spec == "cube") return PolyhedralBall::unit_cube(dim);
    if (spec == "cross") return PolyhedralBall::cross_polytope(dim);
    return ball_from_json(spec);
}

std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> labels;
    std::string current;
    for (const char c : text) {
        if (c == ',') {
            labels.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current += c;
        }
    }
    labels.push_back(current);
    for (const std::string& label : labels) {
        if (label.empty()) {
            throw Error("empty label in --labels '" + text + "'");
        }
    }
    return labels;
}

struct Options {
    std::size_t dim = 0;
    bool json = false;
    bool witness = false;
    bool prune = false;
    std::size_t jobs = 1;
    std::string expr;
    std::string other;
    std::string at;
    std::string ball = "cube";
    std::string target;
    std::string map;
    std::string labels;
    std::string vectors;
};

void run_normalize(const Options& o) {
    NormalForm nf = normalize(parse_expr(o.expr, o.dim));
    if (o.prune) nf = nf_prune(nf);
    std::cout << nf_to_json(nf) << "\n";
}

void run_eval(const Options& o) {
    const Expr e = parse_expr(o.expr, o.dim);
    const Vector x = parse_vector(o.at, o.dim);
    print_value(to_string(eval_expr(e, x)), o.json);
}

void run_leq(const Options& o) {
    const NormalForm f = normalize(parse_expr(o.expr, o.dim));
    const NormalForm g = normalize(parse_expr(o.other, o.dim));
    const bool verdict = nf_leq(f, g);
    std::optional<Vector> witness;
    if (o.witness && !verdict) witness = separating_witness(f, g);
    print_verdict(verdict, witness, o.witness, o.json);
}

void run_eq(const Options& o) {
    const NormalForm f = normalize(parse_expr(o.expr, o.dim));
    const NormalForm g = normalize(parse_expr(o.other, o.dim));
    const std::optional<Vector> witness = separating_witness(f, g);
    print_verdict(!witness.has_value(), witness, o.witness, o.json);
}

void run_zero(const Options& o) {
    const NormalForm f = normalize(parse_expr(o.expr, o.dim));
    const std::optional<Vector> witness =
        separating_witness(f, NormalForm::zero(o.dim));
    print_verdict(!witness.has_value(), witness, o.witness, o.json);
}

void run_hull(const Options& o) {
    const std::vector<Vector> vectors = parse_vector_list(o.vectors);
    const HullResult result = hull_contains_zero(vectors);
    nlohmann::json doc;
    doc["contains_zero"] = result.contains_zero;
    if (result.contains_zero) {
        nlohmann::json weights = nlohmann::json::array();
        for (const Rational& w : *result.weights) weights.push_back(to_string(w));
        doc["weights"] = std::move(weights);
    } else {
        doc["separator"] = vector_json(*result.separator);
    }
    std::cout << doc.dump() << "\n";
}

void run_supnorm(const Options& o) {
    const NormalForm f = normalize(parse_expr(o.expr, o.dim));
    const PolyhedralBall ball = make_ball(o.ball, o.dim);
    print_value(to_string(sup_on_ball(f, ball, o.jobs)), o.json);
}

void run_factor(const Options& o) {
    const Expr e = parse_expr(o.expr, o.dim);
    const TargetLattice target = parse_target(o.target);
    const LinearMapSpec map = map_from_json(o.map);
    const FactorValue value = factor_map(map, target, e);
    if (const auto* scalar = std::get_if<Rational>(&value)) {
        print_value(to_string(*scalar), o.json);
    } else if (const auto* coords = std::get_if<Vector>(&value)) {
        if (o.json) {
            nlohmann::json doc;
            doc["value"] = vector_json(*coords);
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << to_string(*coords) << "\n";
        }
    } else {
        std::cout << nf_to_json(std::get<NormalForm>(value)) << "\n";
    }
}

void run_set_normalize(const Options& o) {
    const std::vector<std::string> labels = split_labels(o.labels);
    NormalForm nf = realize_over_set(labels, o.expr);
    if (o.prune) nf = nf_prune(nf);
    std::cout << nf_to_json(nf) << "\n";
}

void run_archimedean(const Options& o) {
    const NormalForm f = normalize(parse_expr(o.expr, o.dim));
    const NormalForm g = normalize(parse_expr(o.other, o.dim));
    const std::optional<Integer> n = archimedean_witness(f, g);
    if (o.json) {
        nlohmann::json doc;
        doc["witness"] = n ? nlohmann::json(n->str()) : nlohmann::json(nullptr);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << (n ? n->str() : "none") << "\n";
    }
}

void run_separate(const Options& o) {
    const NormalForm f = normalize(parse_expr(o.expr, o.dim));
    const NormalForm g = normalize(parse_expr(o.other, o.dim));
    const std::optional<Vector> witness = separating_witness(f, g);
    if (o.json) {
        nlohmann::json doc;
        doc["witness"] = witness ? vector_json(*witness) : nlohmann::json(nullptr);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << (witness ? to_string(*witness) : "none") << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for free vector lattices over Q^n"};
    app.require_subcommand(1);

    Options o;
    void (*action)(const Options&) = nullptr;

    const auto add_dim = [&](CLI::App* sub) {
        sub->add_option("-d,--dim", o.dim, "ambient dimension n")->required();
    };
    const auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "wrap output in a JSON object");
    };

    CLI::App* normalize_cmd =
        app.add_subcommand("normalize", "print the join-of-meets normal form as JSON");
    add_dim(normalize_cmd);
    normalize_cmd->add_flag("--prune", o.prune, "drop semantically redundant blocks");
    normalize_cmd->add_option("expr", o.expr, "lattice expression")->required();
    normalize_cmd->callback([&] { action = run_normalize; });

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression at a point");
    add_dim(eval_cmd);
    add_json(eval_cmd);
    eval_cmd->add_option("expr", o.expr, "lattice expression")->required();
    eval_cmd->add_option("--at", o.at, "evaluation point, e.g. \"[3,5]\"")->required();
    eval_cmd->callback([&] { action = run_eval; });

    CLI::App* leq_cmd = app.add_subcommand("leq", "decide f <= g as functions");
    add_dim(leq_cmd);
    add_json(leq_cmd);
    leq_cmd->add_flag("--witness", o.witness, "print a violating point when false");
    leq_cmd->add_option("f", o.expr, "left expression")->required();
    leq_cmd->add_option("g", o.other, "right expression")->required();
    leq_cmd->callback([&] { action = run_leq; });

    CLI::App* eq_cmd = app.add_subcommand("eq", "decide f = g as functions");
    add_dim(eq_cmd);
    add_json(eq_cmd);
    eq_cmd->add_flag("--witness", o.witness, "print a distinguishing point when false");
    eq_cmd->add_option("f", o.expr, "left expression")->required();
    eq_cmd->add_option("g", o.other, "right expression")->required();
    eq_cmd->callback([&] { action = run_eq; });

    CLI::App* zero_cmd = app.add_subcommand("zero", "decide f = 0 as a function");
    add_dim(zero_cmd);
    add_json(zero_cmd);
    zero_cmd->add_flag("--witness", o.witness, "print a nonvanishing point when false");
    zero_cmd->add_option("f", o.expr, "expression")->required();
    zero_cmd->callback([&] { action = run_zero; });

    CLI::App* hull_cmd = app.add_subcommand(
        "hull", "decide whether 0 lies in the convex hull of the given vectors");
    hull_cmd->add_option("vectors", o.vectors, "vector list, e.g. \"[[1,0],[-1,0]]\"")
        ->required();
    hull_cmd->callback([&] { action = run_hull; });

    CLI::App* supnorm_cmd =
        app.add_subcommand("supnorm", "sup of |f| over a polyhedral dual unit ball");
    add_dim(supnorm_cmd);
    add_json(supnorm_cmd);
    supnorm_cmd->add_option("--ball", o.ball,
                            "\"cube\", \"cross\", or ball JSON (default cube)");
    supnorm_cmd->add_option("--jobs", o.jobs, "parallel LP workers (default 1)");
    supnorm_cmd->add_option("f", o.expr, "expression")->required();
    supnorm_cmd->callback([&] { action = run_supnorm; });

    CLI::App* factor_cmd = app.add_subcommand(
        "factor", "apply the unique lattice homomorphism extending a linear map");
    add_dim(factor_cmd);
    add_json(factor_cmd);
    factor_cmd->add_option("--target", o.target, "scalars | coord:m | free:n")->required();
    factor_cmd->add_option("--map", o.map, "LinearMapSpec JSON")->required();
    factor_cmd->add_option("expr", o.expr, "lattice expression")->required();
    factor_cmd->callback([&] { action = run_factor; });

    CLI::App* set_cmd = app.add_subcommand(
        "set-normalize", "normalize an expression over named generators");
    set_cmd->add_option("--labels", o.labels, "comma-separated label set")->required();
    set_cmd->add_flag("--prune", o.prune, "drop semantically redundant blocks");
    set_cmd->add_option("expr", o.expr, "set expression, e.g. \"a \\\\/ b\"")->required();
    set_cmd->callback([&] { action = run_set_normalize; });

    CLI::App* arch_cmd = app.add_subcommand(
        "archimedean", "least n >= 1 with n*f <= g false, or none when f <= 0");
    add_dim(arch_cmd);
    add_json(arch_cmd);
    arch_cmd->add_option("f", o.expr, "left expression")->required();
    arch_cmd->add_option("g", o.other, "right expression")->required();
    arch_cmd->callback([&] { action = run_archimedean; });

    CLI::App* sep_cmd = app.add_subcommand(
        "separate", "point of the unit cube where f and g differ, or none");
    add_dim(sep_cmd);
    add_json(sep_cmd);
    sep_cmd->add_option("f", o.expr, "left expression")->required();
    sep_cmd->add_option("g", o.other, "right expression")->required();
    sep_cmd->callback([&] { action = run_separate; });

    try {
        app.parse(argc, argv);
        action(o);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const freevl::DimensionMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const freevl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
