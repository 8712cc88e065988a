#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negset::oracle {

struct FixtureCheck {
  std::string label;
  std::string actual;
  std::string expected;
  bool passed() const { return actual == expected; }
};

struct FixtureResult {
  std::string id;
  std::string description;
  std::vector<FixtureCheck> checks;
  /// Set when a published value differs from direct evaluation.
  std::optional<std::string> note;

  bool passed() const;
};

/// Built-in catalog of worked constructions, in a fixed order.
std::span<const std::string_view> fixture_ids();

/// Rebuilds the named construction from raw inputs and compares each step
/// with the recorded value. Throws Error(UnknownFixture).
FixtureResult verify_fixture(std::string_view id);

}  // namespace negset::oracle
