#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hlbench {

enum class Errc {
  kRange,
  kNotFound,
  kValidation,
  kEmbedding,
  kShape,
  kConstruction,
  kInvariant,
  kBudget,
  kArgument,
  kProtocol,
  kDomain,
  kParse,
};

std::string_view errc_name(Errc code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + " error: " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kRange: return "range";
    case Errc::kNotFound: return "not-found";
    case Errc::kValidation: return "validation";
    case Errc::kEmbedding: return "embedding";
    case Errc::kShape: return "shape";
    case Errc::kConstruction: return "construction";
    case Errc::kInvariant: return "invariant";
    case Errc::kBudget: return "budget";
    case Errc::kArgument: return "argument";
    case Errc::kProtocol: return "protocol";
    case Errc::kDomain: return "domain";
    case Errc::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace hlbench
