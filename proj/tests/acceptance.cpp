// Acceptance suite: one PASS/FAIL line per criterion. Criteria can be
// selected by number on the command line; all run by default.

#include "kposet/algebra.hpp"
#include "kposet/chains.hpp"
#include "kposet/digraph.hpp"
#include "kposet/enumerate.hpp"
#include "kposet/homomorphism.hpp"
#include "support.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace kposet;
using namespace kposet::testing;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

auto exists(const std::optional<Homomorphism> & h) -> bool { return h.has_value(); }

auto homomorphism_transfer() -> Outcome
{
    auto graphs = all_digraphs(3);
    std::vector<LabeledPoset> posets, lattices;
    for (const auto & g : graphs) {
        posets.push_back(encode_poset(g));
        lattices.push_back(encode_lattice(g));
    }
    std::size_t pairs = 0, mismatches = 0, yes = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = 0; j < graphs.size(); ++j) {
            ++pairs;
            auto h = graph_find_homomorphism(graphs[i], graphs[j]);
            bool expected = exists(h);
            yes += expected;
            bool ok = expected == oracle_graph_hom(graphs[i], graphs[j]) &&
                (! h || graph_verify_homomorphism(graphs[i], graphs[j], *h)) &&
                exists(find_homomorphism(posets[i], posets[j])) == expected &&
                exists(find_homomorphism(lattices[i], lattices[j])) == expected;
            mismatches += ! ok;
        }
    std::ostringstream out;
    out << graphs.size() << " digraphs, " << pairs << " ordered pairs (" << yes << " homomorphic), " << mismatches
        << " mismatches";
    return {mismatches == 0 && graphs.size() == 117, out.str()};
}

auto core_transfer() -> Outcome
{
    auto graphs = all_digraphs(3);
    std::size_t mismatches = 0, cores = 0;
    for (const auto & g : graphs) {
        auto pg = encode_poset(g);
        bool graph_core_flag = graph_is_core(g);
        cores += graph_core_flag;
        bool ok = graph_core_flag == oracle_graph_is_core(g) && is_core(pg) == graph_core_flag &&
            is_isomorphic(compute_core(pg).core, encode_poset(graph_core(g))).has_value();
        mismatches += ! ok;
    }
    std::ostringstream out;
    out << graphs.size() << " digraphs (" << cores << " cores), " << mismatches << " mismatches";
    return {mismatches == 0, out.str()};
}

auto solver_vs_oracle() -> Outcome
{
    auto family = all_posets(4, 2);
    std::size_t pairs = 0, mismatches = 0;
    auto check = [&](const LabeledPoset & p, const LabeledPoset & q) {
        ++pairs;
        auto h = find_homomorphism(p, q);
        bool ok = exists(h) == exists(brute_force_homomorphism(p, q)) && (! h || verify_homomorphism(p, q, *h));
        mismatches += ! ok;
    };
    for (const auto & p : family)
        for (const auto & q : family)
            check(p, q);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        auto p = random_poset(rng, rng() % 7, 3, 0.2 + 0.1 * static_cast<double>(i % 6));
        auto q = random_poset(rng, rng() % 6, 3, 0.2 + 0.1 * static_cast<double>(i % 5));
        check(p, q);
    }
    std::ostringstream out;
    out << family.size() << "^2 exhaustive + 1000 random pairs = " << pairs << ", " << mismatches << " mismatches";
    return {mismatches == 0 && family.size() == 234, out.str()};
}

auto lattice_laws() -> Outcome
{
    auto family = all_posets(4, 2);
    std::size_t triples = 0, failures = 0, isomorphism_failures = 0;
    auto check = [&](const LabeledPoset & p, const LabeledPoset & q, const LabeledPoset & r) {
        ++triples;
        auto report = check_lattice_laws(p, q, r);
        failures += ! report.all_passed();
        for (const auto & law : report.laws)
            if (law.name == "meet-over-join-isomorphism" && ! law.passed)
                ++isomorphism_failures;
    };
    for (const auto & p : family)
        for (const auto & q : family)
            for (const auto & r : family)
                check(p, q, r);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        auto p = random_poset(rng, rng() % 6, 3);
        auto q = random_poset(rng, rng() % 6, 3);
        auto r = random_poset(rng, rng() % 6, 3);
        check(p, q, r);
    }
    std::ostringstream out;
    out << triples << " triples, " << failures << " with a failed law, " << isomorphism_failures
        << " failed the isomorphism form";
    return {failures == 0 && isomorphism_failures == 0, out.str()};
}

auto figures() -> Outcome
{
    std::vector<std::string> failed;
    auto product = label_matching_product(figure_left_chain(), figure_right_chain());
    if (! is_isomorphic(product, figure_product()) || ! oracle_isomorphic(product, figure_product()))
        failed.push_back("product of the two chains");
    auto loop = encode_lattice(digraph({"a"}, {{"a", "a"}}));
    if (! is_isomorphic(loop, figure_loop()) || ! oracle_isomorphic(loop, figure_loop()))
        failed.push_back("lattice encoding of a loop");
    auto encoded = encode_poset(figure_graph());
    if (encoded.size() != 18 || encoded.covers().size() != 19)
        failed.push_back("poset encoding of the four-vertex graph");
    std::ostringstream out;
    out << "product 5 elements, loop 6 elements, graph encoding " << encoded.size() << " elements / "
        << encoded.covers().size() << " covers";
    for (const auto & f : failed)
        out << "; mismatch: " << f;
    return {failed.empty(), out.str()};
}

auto two_lattices() -> Outcome
{
    std::vector<LabeledPoset> lattices;
    for (const auto & p : all_posets(5, 2))
        if (! p.empty() && structure_report(p).is_lattice)
            lattices.push_back(p);
    std::size_t mismatches = 0, pairs = 0;
    for (const auto & l1 : lattices) {
        if (! is_isomorphic(two_lattice_core(l1), compute_core(l1).core))
            ++mismatches;
        for (const auto & l2 : lattices) {
            ++pairs;
            mismatches += two_lattice_decide(l1, l2) != exists(find_homomorphism(l1, l2));
        }
    }
    std::ostringstream out;
    out << lattices.size() << " 2-lattices, " << pairs << " ordered pairs, " << mismatches << " mismatches";
    return {mismatches == 0, out.str()};
}

auto glued_join() -> Outcome
{
    constexpr Label top = 2, bottom = 0;
    std::mt19937_64 rng(7);
    auto bounded = [&](std::size_t max_size) {
        return random_bounded_poset(rng, 2 + rng() % (max_size - 1), 3, top, bottom, 0.2 + 0.2 * (rng() % 3));
    };
    std::size_t failures = 0, candidates = 0, upper_bounds = 0;
    for (int i = 0; i < 200; ++i) {
        auto p1 = bounded(5), p2 = bounded(5), p3 = bounded(5);
        auto glued = glue_join(p1, p2, top, bottom);
        if (! verify_homomorphism(p1, glued, glue_injection(p1, 0, glued)) ||
            ! verify_homomorphism(p2, glued, glue_injection(p2, 1, glued)))
            ++failures;
        for (int j = 0; j < 20; ++j) {
            // half plain random, half built to sit above both inputs
            LabeledPoset candidate = bounded(6);
            switch (j % 4) {
            case 1:
                candidate = glue_join(std::vector<LabeledPoset>{candidate, p1, bounded(4), p2}, top, bottom);
                break;
            case 3:
                candidate = label_matching_product(glue_join(p2, candidate, top, bottom),
                    glue_join(p1, glue_join(p2, bounded(3), top, bottom), top, bottom));
                break;
            default:
                break;
            }
            ++candidates;
            bool above = exists(find_homomorphism(p1, candidate)) && exists(find_homomorphism(p2, candidate));
            upper_bounds += above;
            if (above != exists(find_homomorphism(glued, candidate)))
                ++failures;
        }
        if (! check_glue_distributivity(p1, p2, p3, top, bottom))
            ++failures;
    }
    std::ostringstream out;
    out << "200 triples, " << candidates << " candidates (" << upper_bounds << " upper bounds), " << failures
        << " failures";
    return {failures == 0 && upper_bounds > 0 && upper_bounds < candidates, out.str()};
}

auto join_irreducibility() -> Outcome
{
    // 3-labeled cores on at most 4 elements and 2-labeled ones on 5
    std::vector<LabeledPoset> cores;
    for (const auto & p : all_posets(4, 3))
        if (is_core(p))
            cores.push_back(p);
    for (const auto & p : all_posets(5, 2))
        if (p.size() == 5 && is_core(p))
            cores.push_back(p);
    const auto n = cores.size();
    std::vector<std::vector<char>> hom(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            hom[i][j] = exists(find_homomorphism(cores[i], cores[j]));

    std::size_t irreducible_mismatches = 0, irreducible = 0;
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<std::size_t> below;
        for (std::size_t q = 0; q < n; ++q)
            if (hom[q][p] && ! hom[p][q])
                below.push_back(q);
        bool decomposes = false;
        for (std::size_t a = 0; a < below.size() && ! decomposes; ++a)
            for (std::size_t b = a; b < below.size() && ! decomposes; ++b)
                decomposes = equivalent(cores[p], disjoint_union(cores[below[a]], cores[below[b]]));
        bool flag = is_join_irreducible(cores[p]);
        irreducible += flag;
        irreducible_mismatches += flag == decomposes;
    }

    std::size_t prime_checks = 0, prime_exceptions = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (cores[a].empty() || ! structure_report(cores[a]).is_connected)
            continue;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x; y < n; ++y) {
                ++prime_checks;
                bool joined = exists(find_homomorphism(cores[a], disjoint_union(cores[x], cores[y])));
                prime_exceptions += joined != (hom[a][x] || hom[a][y]);
            }
    }
    std::ostringstream out;
    out << n << " cores (" << irreducible << " join-irreducible), " << irreducible_mismatches
        << " irreducibility mismatches, " << prime_checks << " primality checks, " << prime_exceptions
        << " exceptions";
    return {irreducible_mismatches == 0 && prime_exceptions == 0, out.str()};
}

auto clique_timing() -> Outcome
{
    bool correct = true;
    std::ostringstream out;
    out << "informational; refute P(K_n) -> P(K_n-1), seconds:" << std::setprecision(3);
    for (std::size_t n = 2; n <= 9; ++n) {
        auto big = encode_poset(clique(n));
        auto small = encode_poset(clique(n - 1));
        auto start = Clock::now();
        correct = correct && ! exists(find_homomorphism(big, small));
        out << " n=" << n << ":" << seconds_since(start);
        correct = correct && exists(find_homomorphism(small, big));
    }
    return {correct, out.str()};
}

struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char ** argv)
{
    std::vector<Criterion> criteria{
        {1, "homomorphism transfer", homomorphism_transfer},
        {2, "core transfer", core_transfer},
        {3, "solver vs enumeration", solver_vs_oracle},
        {4, "lattice laws", lattice_laws},
        {5, "figures", figures},
        {6, "2-lattices", two_lattices},
        {7, "glued join", glued_join},
        {8, "join-irreducibility and primality", join_irreducibility},
        {9, "clique colouring timing", clique_timing},
    };

    CLI::App app{"Acceptance criteria"};
    std::vector<int> selected;
    app.add_option("criteria", selected, "Criterion numbers to run (default: all)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    bool all_passed = true;
    for (const auto & c : criteria) {
        if (! selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end())
            continue;
        auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const std::exception & e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        all_passed = all_passed && outcome.passed;
        std::cout << (outcome.passed ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name
                  << "): " << outcome.detail << " [" << std::fixed << std::setprecision(1) << seconds_since(start)
                  << " s]" << std::defaultfloat << std::endl;
    }
    return all_passed ? 0 : 1;
}
