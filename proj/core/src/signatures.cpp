#include "restream/signatures.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "restream/reassembly.hpp"

namespace restream {

namespace {

inline uint8_t fold(uint8_t c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<uint8_t>(c + 32) : c;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Cursor over one rule line.
struct LineScanner {
  std::string_view text;
  size_t pos = 0;
  size_t line_no;

  explicit LineScanner(std::string_view t, size_t line) : text(t), line_no(line) {}

  [[noreturn]] void fail(const std::string& reason) const {
    throw RuleParseError(RuleParseError::Kind::Malformed, line_no, reason);
  }

  bool at_end() const { return pos >= text.size(); }

  void skip_ws() {
    while (!at_end() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  void expect(std::string_view token) {
    if (text.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos += token.size();
  }

  uint64_t parse_uint(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(std::string("expected ") + what);
    uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
      if (v > 0xFFFFFFFFULL) fail(std::string(what) + " out of range");
      ++pos;
    }
    return v;
  }

  std::string parse_word() {
    const size_t start = pos;
    while (!at_end() && text[pos] != ' ' && text[pos] != '\t') ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::vector<uint8_t> parse_quoted_content() {
    expect("\"");
    std::vector<uint8_t> bytes;
    while (true) {
      if (at_end()) fail("unterminated content string");
      const char c = text[pos++];
      if (c == '"') break;
      if (c != '\\') {
        bytes.push_back(static_cast<uint8_t>(c));
        continue;
      }
      if (at_end()) fail("dangling escape");
      const char esc = text[pos++];
      if (esc == '\\' || esc == '"') {
        bytes.push_back(static_cast<uint8_t>(esc));
      } else if (esc == 'x') {
        if (pos + 2 > text.size()) fail("truncated \\xNN escape");
        const int hi = hex_digit(text[pos]), lo = hex_digit(text[pos + 1]);
        if (hi < 0 || lo < 0) fail("bad \\xNN escape");
        bytes.push_back(static_cast<uint8_t>(hi << 4 | lo));
        pos += 2;
      } else {
        fail(std::string("unknown escape '\\") + esc + "'");
      }
    }
    return bytes;
  }
};

Signature parse_rule_line(std::string_view line, size_t line_no) {
  LineScanner s(line, line_no);
  Signature sig;

  s.skip_ws();
  s.expect("id=");
  const uint64_t id = s.parse_uint("id");
  if (id == 0) s.fail("id must be positive");
  sig.id = static_cast<uint32_t>(id);

  s.skip_ws();
  s.expect("action=");
  const std::string action = s.parse_word();
  if (action == "alert")
    sig.action = SigAction::Alert;
  else if (action == "drop")
    sig.action = SigAction::Drop;
  else
    s.fail("action must be alert or drop");

  s.skip_ws();
  s.expect("content=");
  sig.pattern = s.parse_quoted_content();
  if (sig.pattern.empty()) s.fail("content must not be empty");
  if (sig.pattern.size() > kMaxSegmentBytes) s.fail("content exceeds 16384 bytes");

  // optional trailing attributes, fixed order: nocase then stages
  s.skip_ws();
  if (!s.at_end() && s.text.substr(s.pos, 6) == "nocase") {
    s.pos += 6;
    sig.nocase = true;
    s.skip_ws();
  }
  if (!s.at_end() && s.text.substr(s.pos, 7) == "stages=") {
    s.pos += 7;
    const std::string which = s.parse_word();
    if (which == "1")
      sig.stages = kStage1Bit;
    else if (which == "2")
      sig.stages = kStage2Bit;
    else if (which == "both")
      sig.stages = kBothStages;
    else
      s.fail("stages must be 1, 2 or both");
    s.skip_ws();
  }
  if (!s.at_end()) s.fail("unexpected trailing text '" + s.parse_word() + "'");
  return sig;
}

}  // namespace

SignatureSet SignatureSet::parse(std::string_view text) {
  SignatureSet set;
  std::unordered_set<uint32_t> seen;
  size_t line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;

    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }

    Signature sig = parse_rule_line(line, line_no);
    if (!seen.insert(sig.id).second)
      throw RuleParseError(RuleParseError::Kind::DuplicateId, line_no,
                           "duplicate id " + std::to_string(sig.id));
    set.sigs_.push_back(std::move(sig));
    if (end == text.size()) break;
  }
  set.build();
  return set;
}

SignatureSet SignatureSet::from_signatures(std::vector<Signature> sigs) {
  std::unordered_set<uint32_t> seen;
  for (const Signature& s : sigs) {
    if (s.id == 0) throw std::invalid_argument("signature id must be positive");
    if (s.pattern.empty() || s.pattern.size() > kMaxSegmentBytes)
      throw std::invalid_argument("pattern length out of range");
    if (!seen.insert(s.id).second) throw std::invalid_argument("duplicate signature id");
  }
  SignatureSet set;
  set.sigs_ = std::move(sigs);
  set.build();
  return set;
}

void SignatureSet::build() {
  for (size_t i = 0; i < sigs_.size(); ++i) {
    const Signature& s = sigs_[i];
    if (s.nocase) {
      std::vector<uint8_t> folded(s.pattern.size());
      std::transform(s.pattern.begin(), s.pattern.end(), folded.begin(), fold);
      folded_.add_pattern(folded, static_cast<uint32_t>(i));
      any_nocase_ = true;
    } else {
      exact_.add_pattern(s.pattern, static_cast<uint32_t>(i));
    }
  }
  exact_.build();
  folded_.build();
}

const Signature* SignatureSet::by_id(uint32_t id) const {
  for (const Signature& s : sigs_)
    if (s.id == id) return &s;
  return nullptr;
}

std::vector<MatchResult> match_buffer(std::span<const uint8_t> buffer, const SignatureSet& sigs,
                                      Stage stage) {
  if (sigs.empty()) return {};
  constexpr size_t kNone = static_cast<size_t>(-1);
  std::vector<size_t> first(sigs.sigs_.size(), kNone);
  const auto record = [&](uint32_t idx, size_t end) {
    // Occurrences arrive in end order; with fixed pattern lengths the first
    // end is also the first start.
    if (first[idx] == kNone) first[idx] = end - sigs.sigs_[idx].pattern.size();
  };
  if (!sigs.exact_.empty()) sigs.exact_.scan(buffer, record);
  if (sigs.any_nocase_) {
    std::vector<uint8_t> folded(buffer.size());
    std::transform(buffer.begin(), buffer.end(), folded.begin(), fold);
    sigs.folded_.scan(folded, record);
  }

  std::vector<MatchResult> out;
  for (size_t i = 0; i < sigs.sigs_.size(); ++i) {
    if (first[i] == kNone || !stage_applies(sigs.sigs_[i].stages, stage)) continue;
    out.push_back({sigs.sigs_[i].id, first[i], stage});
  }
  return out;
}

}  // namespace restream
