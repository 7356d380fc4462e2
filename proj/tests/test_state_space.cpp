#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exch/errors.hpp"
#include "exch/state_space.hpp"

using namespace exch;

TEST_CASE("sequence enumeration is a mixed-radix bijection") {
    StateSpace s = StateSpace::sequence(3, {0, 1});
    CHECK(s.size_checked() == 8);
    for (std::uint64_t i = 0; i < 8; ++i) CHECK(s.encode(s.decode(i)) == i);
    // first cell most significant: index order = lexicographic order
    CHECK(s.decode(0) == State{0, 0, 0});
    CHECK(s.decode(1) == State{0, 0, 1});
    CHECK(s.decode(4) == State{1, 0, 0});
}

TEST_CASE("array and blocked spaces") {
    StateSpace a = StateSpace::array(2, 3, {0, 1});
    CHECK(a.cell_count() == 6);
    CHECK(a.size_checked() == 64);

    StateSpace b = StateSpace::blocked({Block{2, {0, 1}}, Block{1, {0, 1, 2}}});
    CHECK(b.size_checked() == 12);
    CHECK(b.block_of_cell(0) == 0);
    CHECK(b.block_of_cell(2) == 1);
    CHECK(b.radix(2) == 3);
    for (std::uint64_t i = 0; i < 12; ++i) CHECK(b.encode(b.decode(i)) == i);
}

TEST_CASE("state formatting round-trips through symbols") {
    StateSpace s = StateSpace::sequence(3, {5, 7});
    State x{1, 0, 1};
    CHECK(s.format_state(x) == "7,5,7");
    CHECK(s.parse_state("7,5,7") == x);

    StateSpace b = StateSpace::blocked({Block{2, {0, 1}}, Block{2, {0, 1}}});
    CHECK(b.format_state({0, 1, 1, 0}) == "0,1;1,0");
    CHECK(b.parse_state("0,1;1,0") == State{0, 1, 1, 0});

    CHECK_THROWS_AS(s.parse_state("7,5"), validation_error);
    CHECK_THROWS_AS(s.parse_state("7,5,9"), validation_error);
    CHECK_THROWS_AS(b.parse_state("0,1,1,0"), validation_error);
}

TEST_CASE("empty sequences have exactly one state") {
    StateSpace s = StateSpace::sequence(0, {0, 1});
    CHECK(s.size_checked() == 1);
    CHECK(s.decode(0) == State{});
    CHECK(s.format_state({}) == "");
    CHECK(s.parse_state("") == State{});
}

TEST_CASE("cap errors name the cap") {
    StateSpace s = StateSpace::sequence(30, {0, 1});
    CHECK_THROWS_WITH_AS(s.size_checked(1 << 20), doctest::Contains("1048576"), cap_exceeded);
    std::uint64_t n = 0;
    CHECK(s.try_size(&n));
    CHECK(n == (std::uint64_t{1} << 30));
    StateSpace huge = StateSpace::sequence(100, {0, 1});
    CHECK_FALSE(huge.try_size(&n));
    CHECK_THROWS_AS(huge.size_checked(), cap_exceeded);
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(StateSpace::sequence(2, {}), validation_error);
    CHECK_THROWS_AS(StateSpace::sequence(2, {0, 0}), validation_error);
    CHECK_THROWS_AS(StateSpace::array(0, 2, {0, 1}), validation_error);
}
