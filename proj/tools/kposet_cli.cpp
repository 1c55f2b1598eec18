// Command-line front end. Exit status: 0 yes/success, 1 no, 2 error.

#include "kposet/algebra.hpp"
#include "kposet/chains.hpp"
#include "kposet/digraph.hpp"
#include "kposet/error.hpp"
#include "kposet/homomorphism.hpp"
#include "kposet/io.hpp"
#include "kposet/poset.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace kposet;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

struct Settings {
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

auto read_input(const std::string & path) -> std::string
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return read_file(path);
}

auto load_poset(const std::string & path) -> LabeledPoset { return parse_poset(read_input(path)); }

auto load_posets(const std::vector<std::string> & paths) -> std::vector<LabeledPoset>
{
    std::vector<LabeledPoset> posets;
    for (const auto & path : paths)
        posets.push_back(load_poset(path));
    return posets;
}

auto solver_options(const Settings & s) -> SolverOptions
{
    SolverOptions options;
    options.shuffle_seed = s.seed;
    return options;
}

auto product_budget(const Settings & s) -> std::uint64_t { return s.budget.value_or(default_product_budget); }
auto enumeration_budget(const Settings & s) -> std::uint64_t { return s.budget.value_or(default_enumeration_budget); }

auto poset_json(const LabeledPoset & p) -> json { return json::parse(serialize_poset(p)); }

auto map_json(const LabeledPoset & src, const LabeledPoset & dst, const Homomorphism & h) -> json
{
    json m = json::object();
    for (const auto & [from, to] : to_id_map(src, dst, h))
        m[from] = to;
    return m;
}

void print(const json & doc) { std::cout << doc.dump(2) << '\n'; }

void print_poset(const LabeledPoset & p, const Settings & s)
{
    if (s.format == "dot")
        std::cout << export_dot(p);
    else
        std::cout << serialize_poset(p);
}

auto decision(bool yes) -> int { return yes ? exit_yes : exit_no; }

} // namespace

int main(int argc, char ** argv)
{
    Settings settings;
    CLI::App app{"Finite labeled posets and their homomorphism order"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--budget", settings.budget, "Cap on enumerated maps and product sizes")->envname("KPOSET_BUDGET");
    app.add_option("--seed", settings.seed, "Seed for randomized search order");
    app.add_option("--format", settings.format, "Output format for posets and graphs")
        ->check(CLI::IsMember({"json", "dot"}));

    std::function<int()> run;
    std::string a, b, c;
    std::vector<std::string> many;

    auto * validate = app.add_subcommand("validate", "Check a poset file and report its structure");
    validate->add_option("poset", a)->required();
    validate->callback([&] {
        run = [&] {
            auto p = load_poset(a);
            auto report = structure_report(p);
            json out{{"valid", true},
                {"k", p.k()},
                {"size", p.size()},
                {"covers", p.covers().size()},
                {"is_connected", report.is_connected},
                {"is_chain", report.is_chain},
                {"is_lattice", report.is_lattice},
                {"component_count", report.component_count},
                {"bounds", nullptr}};
            if (report.bounds)
                out["bounds"] = json{{"top", report.bounds->top_id},
                    {"top_label", report.bounds->top_label},
                    {"bottom", report.bounds->bottom_id},
                    {"bottom_label", report.bounds->bottom_label}};
            print(out);
            return exit_yes;
        };
    });

    bool witness = false, oracle = false;
    auto * hom = app.add_subcommand("hom", "Decide whether a homomorphism src -> dst exists");
    hom->add_option("src", a)->required();
    hom->add_option("dst", b)->required();
    hom->add_flag("--witness", witness, "Print the homomorphism found");
    hom->add_flag("--oracle", oracle, "Use exhaustive enumeration instead of the solver");
    hom->callback([&] {
        run = [&] {
            auto src = load_poset(a);
            auto dst = load_poset(b);
            auto h = oracle ? brute_force_homomorphism(src, dst, enumeration_budget(settings))
                            : find_homomorphism(src, dst, solver_options(settings));
            json out{{"exists", h.has_value()}};
            if (witness && h)
                out["witness"] = map_json(src, dst, *h);
            print(out);
            return decision(h.has_value());
        };
    });

    auto * cmp = app.add_subcommand("compare", "Compare two posets in the homomorphism order");
    cmp->add_option("p", a)->required();
    cmp->add_option("q", b)->required();
    cmp->callback([&] {
        run = [&] {
            auto p = load_poset(a);
            auto q = load_poset(b);
            auto v = compare(p, q, solver_options(settings));
            json out{{"verdict", to_string(v.verdict)}, {"forward", nullptr}, {"backward", nullptr}};
            if (v.forward)
                out["forward"] = map_json(p, q, *v.forward);
            if (v.backward)
                out["backward"] = map_json(q, p, *v.backward);
            print(out);
            return exit_yes;
        };
    });

    auto * equiv = app.add_subcommand("equiv", "Decide homomorphic equivalence");
    equiv->add_option("p", a)->required();
    equiv->add_option("q", b)->required();
    equiv->callback([&] {
        run = [&] {
            auto v = compare(load_poset(a), load_poset(b), solver_options(settings));
            bool yes = v.verdict == Verdict::Equivalent;
            print(json{{"equivalent", yes}});
            return decision(yes);
        };
    });

    bool trace = false;
    auto * core = app.add_subcommand("core", "Compute the core of a poset");
    core->add_option("poset", a)->required();
    core->add_flag("--trace", trace, "Also print every retraction stage");
    core->callback([&] {
        run = [&] {
            auto result = compute_core(load_poset(a), solver_options(settings));
            if (! trace) {
                print_poset(result.core, settings);
                return exit_yes;
            }
            json steps = json::array();
            for (std::size_t i = 0; i < result.retractions.size(); ++i)
                steps.push_back(json{{"from_size", result.stages[i].size()},
                    {"to_size", result.stages[i + 1].size()},
                    {"map", map_json(result.stages[i], result.stages[i + 1], result.retractions[i])}});
            if (settings.format == "dot") {
                std::cerr << steps.dump(2) << '\n';
                print_poset(result.core, settings);
            }
            else
                print(json{{"retractions", steps}, {"core", poset_json(result.core)}});
            return exit_yes;
        };
    });

    auto * is_core_cmd = app.add_subcommand("is-core", "Decide whether every endomorphism is surjective");
    is_core_cmd->add_option("poset", a)->required();
    is_core_cmd->callback([&] {
        run = [&] {
            auto p = load_poset(a);
            auto h = find_nonsurjective_endomorphism(p, solver_options(settings));
            json out{{"is_core", ! h}};
            if (h)
                out["endomorphism"] = map_json(p, p, *h);
            print(out);
            return decision(! h);
        };
    });

    bool as_poset = false, as_lattice = false;
    auto * encode = app.add_subcommand("encode", "Encode a digraph as a 2-poset or a bounded 3-poset");
    encode->add_option("digraph", a)->required();
    auto * poset_flag = encode->add_flag("--poset", as_poset, "Vertex and edge gadgets only");
    auto * lattice_flag = encode->add_flag("--lattice", as_lattice, "With top and bottom adjoined");
    poset_flag->excludes(lattice_flag);
    encode->callback([&] {
        run = [&] {
            if (! as_poset && ! as_lattice)
                throw Error(ErrorKind::InvalidArgument, "encode needs --poset or --lattice");
            auto g = parse_digraph(read_input(a));
            print_poset(as_lattice ? encode_lattice(g) : encode_poset(g), settings);
            return exit_yes;
        };
    });

    auto * meet = app.add_subcommand("meet", "Label-matching product");
    meet->add_option("posets", many)->required()->expected(2, -1);
    meet->callback([&] {
        run = [&] {
            auto family = load_posets(many);
            print_poset(label_matching_product(family, product_budget(settings)), settings);
            return exit_yes;
        };
    });

    auto * join = app.add_subcommand("join", "Disjoint union");
    join->add_option("posets", many)->required()->expected(2, -1);
    join->callback([&] {
        run = [&] {
            auto family = load_posets(many);
            print_poset(disjoint_union(family), settings);
            return exit_yes;
        };
    });

    Label top_label = 0, bottom_label = 0;
    auto * glue = app.add_subcommand("glue", "Join of two bounded posets with fixed extreme labels");
    glue->add_option("p", a)->required();
    glue->add_option("q", b)->required();
    glue->add_option("--top-label", top_label)->required();
    glue->add_option("--bottom-label", bottom_label)->required();
    glue->callback([&] {
        run = [&] {
            print_poset(glue_join(load_poset(a), load_poset(b), top_label, bottom_label), settings);
            return exit_yes;
        };
    });

    auto * alt = app.add_subcommand("alt", "Longest alternating chain");
    alt->add_option("poset", a)->required();
    alt->callback([&] {
        run = [&] {
            auto r = alternation_number(load_poset(a));
            print(json{{"count", r.count}, {"witness", r.witness}});
            return exit_yes;
        };
    });

    auto * two = app.add_subcommand("two-lattice", "Decide l1 -> l2 for 2-lattices by alternation numbers");
    two->add_option("l1", a)->required();
    two->add_option("l2", b)->required();
    two->callback([&] {
        run = [&] {
            auto l1 = load_poset(a);
            auto l2 = load_poset(b);
            bool yes = two_lattice_decide(l1, l2);
            print(json{{"exists", yes},
                {"alt", {alternation_number(l1).count, alternation_number(l2).count}},
                {"core", {poset_json(two_lattice_core(l1)), poset_json(two_lattice_core(l2))}}});
            return decision(yes);
        };
    });

    auto * irreducible = app.add_subcommand("irreducible", "Decide join-irreducibility");
    irreducible->add_option("poset", a)->required();
    irreducible->callback([&] {
        run = [&] {
            bool yes = is_join_irreducible(load_poset(a), solver_options(settings));
            print(json{{"join_irreducible", yes}});
            return decision(yes);
        };
    });

    auto * dot = app.add_subcommand("dot", "Render a poset or digraph file as DOT");
    dot->add_option("file", a)->required();
    dot->callback([&] {
        run = [&] {
            auto text = read_input(a);
            if (is_digraph_document(text))
                std::cout << export_dot(parse_digraph(text));
            else
                std::cout << export_dot(parse_poset(text));
            return exit_yes;
        };
    });

    auto * laws = app.add_subcommand("check-laws", "Check meet/join universal properties and distributivity");
    laws->add_option("p", a)->required();
    laws->add_option("q", b)->required();
    laws->add_option("r", c)->required();
    laws->callback([&] {
        run = [&] {
            auto report = check_lattice_laws(load_poset(a), load_poset(b), load_poset(c), product_budget(settings));
            json out{{"all_passed", report.all_passed()}, {"laws", json::array()}};
            for (const auto & law : report.laws)
                out["laws"].push_back(json{{"name", law.name}, {"passed", law.passed}});
            print(out);
            return decision(report.all_passed());
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_error;
    }

    try {
        return run();
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
}
