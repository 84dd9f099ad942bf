#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phk {

enum class Status { Pass, Fail, Skipped, Inconclusive };

std::string_view to_string(Status s);

/// Outcome of one named verification step. A failing check always carries
/// at least one witness naming the offending generator, pair, triple or
/// degree.
struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  Status status = Status::Pass;
  std::vector<std::string> witnesses;
  std::string note;

  bool passed() const noexcept { return status == Status::Pass; }
  bool failed() const noexcept { return status == Status::Fail; }

  void fail(std::string witness) {
    status = Status::Fail;
    witnesses.push_back(std::move(witness));
  }
};

}  // namespace phk
