#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdl/rational.hpp"

namespace mdl {

enum class Model { MultiSpecies, Open, Braided };

// A configuration is the per-site label vector, stored left to right.
// Lattice sites: multi-species and braided occupy 1..L (vector position
// p is site p+1); the open model occupies 0..L (position = site).
using Config = std::vector<int>;

constexpr std::size_t kDefaultStateCap = 10'000'000;

// Full state space of one model instance, with a deterministic
// lexicographic enumeration (leftmost site most significant).
class StateSpace {
 public:
  StateSpace(Model model, long L, int param,
             std::size_t cap = kDefaultStateCap);

  Model model() const { return model_; }
  long lattice_length() const { return L_; }
  /// n (species), r (species pairs) or m (max occupancy), by model.
  int param() const { return param_; }
  int label_min() const { return lo_; }
  int label_max() const { return hi_; }
  std::size_t sites() const { return sites_; }
  std::size_t size() const { return size_; }

  std::size_t index_of(const Config& c) const;
  Config config_of(std::size_t index) const;
  bool valid(const Config& c) const;

 private:
  Model model_;
  long L_;
  int param_;
  int lo_, hi_;
  std::size_t sites_;
  std::size_t size_;
};

StateSpace enumerate_states(Model model, long L, int param,
                            std::size_t cap = kDefaultStateCap);

/// Number of entries equal to `label` strictly after position `pos`.
long right_count(const Config& c, std::size_t pos, int label);

/// Number of entries equal to `label` strictly before position `pos`.
long left_count(const Config& c, std::size_t pos, int label);

/// Occupancy total strictly before position `pos` (braided counting).
long left_occupancy(const Config& c, std::size_t pos);

/// Ascending positions carrying `label`.
std::vector<std::size_t> species_positions(const Config& c, int label);

/// Open-model (r = 1) index form: ascending positions of the +1 labels
/// away from site 0, the site-0 label, ascending positions of the -1
/// labels away from site 0.
struct OpenSequenceForm {
  std::vector<long> x;  // sites in 1..L with label +1
  int z0 = 0;
  std::vector<long> y;  // sites in 1..L with label -1

  long d1() const { return static_cast<long>(x.size()); }
  long dm1() const { return static_cast<long>(y.size()); }
};

OpenSequenceForm to_sequence_form(const Config& open_config);
Config from_sequence_form(const OpenSequenceForm& seq, long L);

/// Parse a comma/space-separated label string, e.g. "-1 -1 1 1" or "3,0".
Config parse_config(const std::string& text);
std::string format_config(const Config& c);

}  // namespace mdl
