#include "mdl/states.hpp"

#include <sstream>
#include <stdexcept>

namespace mdl {

StateSpace::StateSpace(Model model, long L, int param, std::size_t cap)
    : model_(model), L_(L), param_(param) {
  if (L < 1) throw std::invalid_argument("StateSpace: L must be >= 1");
  if (param < 1) throw std::invalid_argument("StateSpace: parameter must be >= 1");
  switch (model) {
    case Model::MultiSpecies:
      lo_ = 0;
      hi_ = param;
      sites_ = static_cast<std::size_t>(L);
      break;
    case Model::Open:
      lo_ = -param;
      hi_ = param;
      sites_ = static_cast<std::size_t>(L) + 1;
      break;
    case Model::Braided:
      lo_ = 0;
      hi_ = param;
      sites_ = static_cast<std::size_t>(L);
      break;
  }
  const std::size_t base = static_cast<std::size_t>(hi_ - lo_ + 1);
  std::size_t n = 1;
  for (std::size_t i = 0; i < sites_; ++i) {
    if (n > cap / base)
      throw std::length_error("StateSpace: state count exceeds cap");
    n *= base;
  }
  size_ = n;
}

std::size_t StateSpace::index_of(const Config& c) const {
  if (!valid(c)) throw std::invalid_argument("StateSpace: invalid configuration");
  const std::size_t base = static_cast<std::size_t>(hi_ - lo_ + 1);
  std::size_t idx = 0;
  for (int v : c) idx = idx * base + static_cast<std::size_t>(v - lo_);
  return idx;
}

Config StateSpace::config_of(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("StateSpace: index out of range");
  const std::size_t base = static_cast<std::size_t>(hi_ - lo_ + 1);
  Config c(sites_);
  for (std::size_t p = sites_; p-- > 0;) {
    c[p] = static_cast<int>(index % base) + lo_;
    index /= base;
  }
  return c;
}

bool StateSpace::valid(const Config& c) const {
  if (c.size() != sites_) return false;
  for (int v : c)
    if (v < lo_ || v > hi_) return false;
  return true;
}

StateSpace enumerate_states(Model model, long L, int param, std::size_t cap) {
  return StateSpace(model, L, param, cap);
}

long right_count(const Config& c, std::size_t pos, int label) {
  long n = 0;
  for (std::size_t p = pos + 1; p < c.size(); ++p)
    if (c[p] == label) ++n;
  return n;
}

long left_count(const Config& c, std::size_t pos, int label) {
  long n = 0;
  for (std::size_t p = 0; p < pos && p < c.size(); ++p)
    if (c[p] == label) ++n;
  return n;
}

long left_occupancy(const Config& c, std::size_t pos) {
  long n = 0;
  for (std::size_t p = 0; p < pos && p < c.size(); ++p) n += c[p];
  return n;
}

std::vector<std::size_t> species_positions(const Config& c, int label) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < c.size(); ++p)
    if (c[p] == label) out.push_back(p);
  return out;
}

OpenSequenceForm to_sequence_form(const Config& open_config) {
  if (open_config.empty())
    throw std::invalid_argument("to_sequence_form: empty configuration");
  OpenSequenceForm seq;
  seq.z0 = open_config[0];
  for (std::size_t p = 1; p < open_config.size(); ++p) {
    if (open_config[p] == 1) seq.x.push_back(static_cast<long>(p));
    if (open_config[p] == -1) seq.y.push_back(static_cast<long>(p));
    if (open_config[p] > 1 || open_config[p] < -1)
      throw std::invalid_argument("to_sequence_form: only defined for r = 1");
  }
  return seq;
}

Config from_sequence_form(const OpenSequenceForm& seq, long L) {
  Config c(static_cast<std::size_t>(L) + 1, 0);
  c[0] = seq.z0;
  for (long x : seq.x) {
    if (x < 1 || x > L) throw std::invalid_argument("from_sequence_form: x out of range");
    c[static_cast<std::size_t>(x)] = 1;
  }
  for (long y : seq.y) {
    if (y < 1 || y > L) throw std::invalid_argument("from_sequence_form: y out of range");
    if (c[static_cast<std::size_t>(y)] != 0)
      throw std::invalid_argument("from_sequence_form: overlapping x and y");
    c[static_cast<std::size_t>(y)] = -1;
  }
  return c;
}

Config parse_config(const std::string& text) {
  Config c;
  std::string token;
  std::istringstream in(text);
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream in2(cleaned);
  while (in2 >> token) {
    try {
      c.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_config: bad label '" + token + "'");
    }
  }
  if (c.empty()) throw std::invalid_argument("parse_config: no labels in input");
  return c;
}

std::string format_config(const Config& c) {
  std::ostringstream os;
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (p) os << ' ';
    os << c[p];
  }
  return os.str();
}

}  // namespace mdl
