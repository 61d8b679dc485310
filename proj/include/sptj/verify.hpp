#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sptj {

/// One compared coefficient. lhs and rhs are rendered values (an integer,
/// or a Laurent polynomial in z for bivariate identities).
struct VerifyRow {
  int n = 0;
  std::string lhs;
  std::string rhs;
  bool ok = true;
};

struct VerifyParams {
  int j = 0;  // 0 = identity default
  int k = 0;
  int r = 0;
  int order = 0;  // 0 = identity default
};

struct VerifyReport {
  std::string identity;
  std::string description;
  VerifyParams params;  // with defaults filled in
  std::vector<VerifyRow> rows;
  /// Free-form findings, such as a strictness threshold or a known exception.
  std::vector<std::string> notes;

  bool passed() const;
  /// Index into rows of the first row with ok == false.
  std::optional<size_t> first_failure() const;
};

/// Registered identity names in a fixed order.
const std::vector<std::string>& identity_names();
bool is_identity(const std::string& name);
std::string identity_description(const std::string& name);

/// Expands or enumerates both sides of a registered identity.
/// Throws std::invalid_argument for unknown names or bad parameters.
VerifyReport run_identity(const std::string& name, VerifyParams params = {});

/// Smallest n0 in [1, order] such that _jN_{2k}(n) - _{j+1}N_{2k}(n) > 0 for
/// all n0 <= n <= order; empty if the difference vanishes at n = order.
std::optional<int> strictness_threshold(int j, int k, int order);

}  // namespace sptj
