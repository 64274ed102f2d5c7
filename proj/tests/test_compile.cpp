#include <catch2/catch_amalgamated.hpp>

#include "diobound/compile.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace diobound;

TEST_CASE("x = 1 compiles to a single unit equation") {
    CompilationResult r = compile(parse_equation("x = 1"));
    CHECK(r.m() == 1);
    CHECK(r.var_map.at("x") == 1);
    CHECK(r.system == System(1, {unit(1)}));
    CHECK(solutions_in_box<BigInt>(r.system, BigInt(10)) ==
          std::vector<Tuple<BigInt>>{{BigInt(1)}});
}

TEST_CASE("2*x = 4 pins x to 2 through forced constants") {
    CompilationResult r = compile(parse_equation("2*x = 4"));
    const unsigned x = r.var_map.at("x");
    auto sols = solutions_in_box<BigInt>(r.system, BigInt(10));
    REQUIRE(sols.size() == 1);
    CHECK(sols.front()[x - 1] == 2);

    auto rep = check_equivalence(r, 10);
    CHECK(rep.ok());
    CHECK(rep.eq_solutions == 1);
}

TEST_CASE("x^2 = x + 1 has no integer solutions") {
    CompilationResult r = compile(parse_equation("x^2 = x + 1"));
    CHECK(solutions_in_box<BigInt>(r.system, derived_radii(r, BigInt(100))).empty());
    auto rep = check_equivalence(r, 50);
    CHECK(rep.ok());
    CHECK(rep.eq_solutions == 0);
}

TEST_CASE("x*y - 3 = 0 keeps its divisor pairs") {
    CompilationResult r = compile(parse_equation("x*y - 3 = 0"));
    auto rep = check_equivalence(r, 12);
    CHECK(rep.ok());
    CHECK(rep.eq_solutions == 4); // (1,3),(3,1),(-1,-3),(-3,-1)
}

TEST_CASE("x^2 + y^2 = 25 finds the lattice circle") {
    CompilationResult r = compile(parse_equation("x^2 + y^2 = 25"));
    auto rep = check_equivalence(r, 12);
    CHECK(rep.ok());
    CHECK(rep.eq_solutions == 12);
}

TEST_CASE("negative terms move across the equality") {
    CompilationResult r = compile(parse_equation("x - y = 2"));
    // no equation may mention subtraction: every stored relation is
    // unit/add/mul over non-negative combinations
    auto rep = check_equivalence(r, 8);
    CHECK(rep.ok());
    // x = y + 2 inside the box: y in [-8, 6]
    CHECK(rep.eq_solutions == 15);
}

TEST_CASE("auxiliary roles describe the construction") {
    CompilationResult r = compile(parse_equation("2*x = 4"));
    bool has_one = false, has_zero = false, has_const = false;
    for (const auto& [idx, role] : r.aux_roles) {
        if (role == "one") has_one = true;
        if (role == "zero") has_zero = true;
        if (role.rfind("constant", 0) == 0) has_const = true;
        CHECK(idx > r.equation.var_count()); // originals are not auxiliaries
    }
    CHECK(has_one);
    CHECK(has_zero);
    CHECK(has_const);
    // the zero variable carries its defining equation z + z = z
    for (const auto& [idx, role] : r.aux_roles)
        if (role == "zero") CHECK(r.system.contains(add(idx, idx, idx)));
}

TEST_CASE("forced auxiliaries take their role values in any solution") {
    CompilationResult r = compile(parse_equation("3*x^2 - y = 1"));
    auto sols = solutions_in_box<BigInt>(r.system, derived_radii(r, BigInt(6)));
    REQUIRE(!sols.empty());
    for (const auto& sol : sols) {
        Tuple<BigInt> originals(sol.begin(), sol.begin() + r.equation.var_count());
        CHECK(sol == forced_extension(r, originals));
    }
}

TEST_CASE("compilation size stays within its structural budget") {
    // the compiler asserts the bound internally; these exercise it
    for (const char* text :
         {"x = 1", "2*x = 4", "x^2 = x + 1", "x*y - 3 = 0", "x^2 + y^2 = 25",
          "17*x^3 - 5*y^2 + 19*z - 12 = 7*x*y*z + 3", "1000003*x = 999983*y + 65536"}) {
        CHECK_NOTHROW(compile(parse_equation(text)));
    }
}

TEST_CASE("random polynomial corpus round-trips at box 8") {
    std::mt19937_64 rng(103);
    for (int round = 0; round < 40; ++round) {
        const unsigned k = 1 + rng() % 3;
        const char* names[] = {"x", "y", "z"};
        std::string text;
        const unsigned terms = 1 + rng() % 4;
        for (unsigned t = 0; t < terms; ++t) {
            long coeff = static_cast<long>(rng() % 41) - 20;
            if (t == 0)
                text += std::to_string(coeff);
            else
                text += (coeff < 0 ? " - " : " + ") + std::to_string(std::labs(coeff));
            unsigned degree_left = 3;
            for (unsigned v = 0; v < k; ++v) {
                unsigned e = rng() % (degree_left + 1);
                degree_left -= e;
                if (e > 0) text += "*" + std::string(names[v]) + "^" + std::to_string(e);
            }
        }
        long rhs = static_cast<long>(rng() % 41) - 20;
        text += " = " + std::to_string(rhs);
        CompilationResult r = compile(parse_equation(text));
        auto rep = check_equivalence(r, 8);
        INFO(text);
        CHECK(rep.ok());
    }
}

TEST_CASE("equivalence check enforces its budget") {
    CompilationResult r = compile(parse_equation("x + y + z = 3"));
    SolveLimits tight;
    tight.max_nodes = 50;
    CHECK_THROWS_AS(check_equivalence(r, 12, tight), budget_exceeded);
}
