#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

// Coordinates over the simple roots.
using Root = std::vector<int>;

// Reduced root system with Bourbaki labeling.
class RootSystem {
 public:
  // Throws InvalidRank.
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  // Positive roots ordered by (height, coordinates), then their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return static_cast<int>(roots_.size()) / 2; }
  std::vector<Root> positive_roots() const;
  std::vector<Root> simple_roots() const;
  const Root& highest_root() const { return roots_[num_positive() - 1]; }

  int index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  static int height(const Root& r);
  static bool is_positive(const Root& r);

  // Symmetric form scaled so short roots have squared length 2.
  int inner(const Root& a, const Root& b) const;
  int norm(const Root& a) const { return inner(a, a); }
  bool is_long(const Root& a) const { return norm(a) == long_norm_; }
  bool is_simply_laced() const { return long_norm_ == 2; }
  // <b, a^vee> = 2(b,a)/(a,a).
  int pairing(const Root& b, const Root& a) const;
  // a^vee over the simple coroots.
  std::vector<int> coroot(const Root& a) const;
  // Entry (i,j) is <alpha_j, alpha_i^vee>.
  std::vector<std::vector<int>> cartan_matrix() const;

  // Classical types only: coordinates in the standard basis eps_1..eps_n.
  bool has_epsilon_coordinates() const { return type_ == 'B' || type_ == 'C' || type_ == 'D'; }
  std::vector<int> to_epsilon(const Root& r) const;
  // Throws PreconditionNotMet if the vector is not a root.
  Root from_epsilon(const std::vector<int>& eps) const;

  // "011" for positive roots, "-011" for negative ones.
  static std::string root_string(const Root& r);
  // Parses the format of root_string.
  Root parse_root(const std::string& s) const;

 private:
  char type_;
  int rank_;
  int long_norm_ = 2;
  std::vector<std::vector<int>> gram_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
};

// Structure constants N_{a,b} of a Chevalley basis: [x_a, x_b] = N_{a,b} x_{a+b}.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& rs);

  static const char* convention_version() { return "extraspecial-height-lex-v1"; }
  const RootSystem& root_system() const { return rs_; }
  // Zero when a+b is not a root.
  int N(const Root& a, const Root& b) const;
  int N(int a, int b) const { return table_[static_cast<std::size_t>(a) * rs_.roots().size() + b]; }
  // The pair (a,b), a before b, with a minimal among positive pairs summing to the given non-simple positive root.
  std::pair<int, int> extraspecial_pair(int positive_root) const;
  // Largest p with b - p a a root.
  int string_length_down(const Root& b, const Root& a) const;

 private:
  RootSystem rs_;
  std::vector<int> table_;
  std::map<int, std::pair<int, int>> extraspecial_;
};

}  // namespace extremal
