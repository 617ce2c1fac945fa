#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "restream/ahocorasick.hpp"

namespace restream {

enum class SigAction { Alert, Drop };

enum class Stage : uint8_t { Stage1 = 1, Stage2 = 2 };

// stage applicability bitmask
inline constexpr uint8_t kStage1Bit = 0x1;
inline constexpr uint8_t kStage2Bit = 0x2;
inline constexpr uint8_t kBothStages = kStage1Bit | kStage2Bit;

inline bool stage_applies(uint8_t stages, Stage s) {
  return (stages & (s == Stage::Stage1 ? kStage1Bit : kStage2Bit)) != 0;
}

// A content rule: raw byte pattern, alert-or-drop action, optional ASCII
// case-insensitivity, and the DPI stages it participates in.
struct Signature {
  uint32_t id = 0;
  SigAction action = SigAction::Alert;
  std::vector<uint8_t> pattern;  // 1..16384 bytes
  bool nocase = false;
  uint8_t stages = kBothStages;
};

class RuleParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, DuplicateId };

  RuleParseError(Kind kind, size_t line, const std::string& reason)
      : std::runtime_error("rules line " + std::to_string(line) + ": " + reason),
        kind_(kind),
        line_(line),
        reason_(reason) {}

  Kind kind() const { return kind_; }
  size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  Kind kind_;
  size_t line_;
  std::string reason_;
};

struct MatchResult {
  uint32_t signature_id = 0;
  size_t offset = 0;  // first occurrence
  Stage stage = Stage::Stage1;
};

// Immutable signature set with prebuilt matchers. One automaton holds the
// case-sensitive patterns, a second holds the nocase patterns folded to
// lowercase.
class SignatureSet {
 public:
  SignatureSet() = default;

  // One rule per line:
  //   id=<n> action=<alert|drop> content="<bytes>" [nocase] [stages=1|2|both]
  // '#' lines and blank lines are skipped; \xNN, \\ and \" escapes are
  // recognized inside content. Throws RuleParseError.
  static SignatureSet parse(std::string_view text);

  // Validates ids and pattern bounds; throws std::invalid_argument.
  static SignatureSet from_signatures(std::vector<Signature> sigs);

  const std::vector<Signature>& signatures() const { return sigs_; }
  const Signature* by_id(uint32_t id) const;
  bool empty() const { return sigs_.empty(); }

 private:
  void build();

  std::vector<Signature> sigs_;
  AhoCorasick exact_;
  AhoCorasick folded_;
  bool any_nocase_ = false;

  friend std::vector<MatchResult> match_buffer(std::span<const uint8_t> buffer,
                                               const SignatureSet& sigs, Stage stage);
};

// Every stage-applicable signature that occurs in the buffer, first occurrence
// offset each, in signature-definition order. Equivalent to a naive
// per-signature substring scan; nocase folds ASCII letters only.
std::vector<MatchResult> match_buffer(std::span<const uint8_t> buffer, const SignatureSet& sigs,
                                      Stage stage);

}  // namespace restream
