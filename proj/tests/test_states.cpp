#include <doctest.h>

#include <cstdint>

#include "mdl/states.hpp"

using namespace mdl;

namespace {

// small deterministic generator for property-style sweeps
struct Lcg {
  std::uint64_t s = 0x853c49e6748fea9bULL;
  std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
  int pick(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("state space sizes") {
  CHECK(enumerate_states(Model::MultiSpecies, 2, 1).size() == 4);
  CHECK(enumerate_states(Model::Open, 1, 1).size() == 9);
  CHECK(enumerate_states(Model::Braided, 2, 2).size() == 9);
  CHECK_THROWS_AS(enumerate_states(Model::MultiSpecies, 30, 3, 1000),
                  std::length_error);
}

TEST_CASE("lexicographic order matches the occupancy-pair basis") {
  StateSpace sp = enumerate_states(Model::Braided, 2, 2);
  CHECK(sp.config_of(0) == Config{0, 0});
  CHECK(sp.config_of(1) == Config{0, 1});
  CHECK(sp.config_of(2) == Config{0, 2});
  CHECK(sp.config_of(3) == Config{1, 0});
  CHECK(sp.config_of(8) == Config{2, 2});
}

TEST_CASE("index round trip is a bijection") {
  for (auto sp : {enumerate_states(Model::MultiSpecies, 3, 2),
                  enumerate_states(Model::Open, 2, 1),
                  enumerate_states(Model::Braided, 3, 2)}) {
    for (std::size_t i = 0; i < sp.size(); ++i)
      CHECK(sp.index_of(sp.config_of(i)) == i);
  }
}

TEST_CASE("counting statistics") {
  Config closed{1, 0, 1};
  CHECK(right_count(closed, 0, 1) == 1);
  CHECK(right_count(closed, 2, 1) == 0);

  // open configuration -1 -1 1 1 on sites 0..3
  Config open{-1, -1, 1, 1};
  CHECK(right_count(open, 0, 1) == 2);
  CHECK(left_count(open, 1, -1) == 1);
  CHECK(left_count(open, 0, -1) == 0);

  Config braided{3, 0, 2};
  CHECK(left_occupancy(braided, 2) == 3);
  CHECK(left_occupancy(braided, 0) == 0);
}

TEST_CASE("species positions") {
  Config xi{1, -1, 0, 1};  // sites 0..3
  CHECK(species_positions(xi, 1) == std::vector<std::size_t>{0, 3});
  CHECK(species_positions(xi, -1) == std::vector<std::size_t>{1});
  CHECK(species_positions(Config{0, 0}, 1).empty());
}

TEST_CASE("count identity over random configurations") {
  Lcg rng;
  for (int trial = 0; trial < 200; ++trial) {
    Config c(6);
    for (auto& v : c) v = rng.pick(0, 3);
    for (int j = 0; j <= 3; ++j) {
      long total = static_cast<long>(species_positions(c, j).size());
      for (std::size_t p = 0; p < c.size(); ++p)
        CHECK(right_count(c, p, j) + left_count(c, p, j) +
                  (c[p] == j ? 1 : 0) ==
              total);
    }
  }
}

TEST_CASE("species positions partition the lattice") {
  Lcg rng;
  for (int trial = 0; trial < 50; ++trial) {
    Config c(5);
    for (auto& v : c) v = rng.pick(-1, 1);
    std::size_t covered = 0;
    for (int j = -1; j <= 1; ++j) covered += species_positions(c, j).size();
    CHECK(covered == c.size());
  }
}

TEST_CASE("open sequence form round trip") {
  Lcg rng;
  for (int trial = 0; trial < 200; ++trial) {
    Config c(5);
    for (auto& v : c) v = rng.pick(-1, 1);
    OpenSequenceForm seq = to_sequence_form(c);
    for (std::size_t i = 1; i < seq.x.size(); ++i) CHECK(seq.x[i - 1] < seq.x[i]);
    for (std::size_t i = 1; i < seq.y.size(); ++i) CHECK(seq.y[i - 1] < seq.y[i]);
    CHECK(from_sequence_form(seq, 4) == c);
  }
}

TEST_CASE("config parsing") {
  CHECK(parse_config("-1 -1 1 1") == Config{-1, -1, 1, 1});
  CHECK(parse_config("3 0") == Config{3, 0});
  CHECK(parse_config("3,0") == Config{3, 0});
  CHECK(format_config(Config{-1, 0, 2}) == "-1 0 2");
  CHECK_THROWS(parse_config(""));
  CHECK_THROWS(parse_config("x y"));
}
