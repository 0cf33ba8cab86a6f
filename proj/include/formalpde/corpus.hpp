#pragma once

#include "formalpde/system.hpp"

#include <string>
#include <vector>

namespace formalpde {

// Where an expected value comes from: a number printed in the reference
// examples, a value frozen from an independent oracle computation, or an
// identity that holds by construction.
enum class Source { Published, Oracle, Identity };
std::string to_string(Source s);

struct CheckResult {
  std::string key;
  std::string expected;
  std::string actual;
  Source source = Source::Published;
  bool pass = false;
};

struct CorpusRun {
  std::string name;
  std::string description;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool pass() const;
};

struct CorpusEntryInfo {
  std::string name;
  std::string description;
  std::string source;  // system text in the input grammar (the main system of the entry)
};

std::vector<CorpusEntryInfo> corpus_entries();

// Notes attached to corpus entries whose system renders identically to sys.
std::vector<std::string> corpus_notes(const LinearSystem& sys);

// Throws std::out_of_range for an unknown name.
CorpusRun run_corpus_entry(const std::string& name, unsigned long long seed = 0);

}  // namespace formalpde
