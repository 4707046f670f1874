#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "postlie/io.hpp"

namespace postlie {

/// Extra knobs for check kinds that take them.
struct CheckOptions {
  Scalar weight = 1;                          // rb
  CoalgebraMode mode = CoalgebraMode::dual;   // pp-coalg
};

/// Check kinds in the order they are documented.
const std::vector<std::string>& check_kinds();
/// Construction names in the order they are documented.
const std::vector<std::string>& construction_names();

/// Runs one checker on already loaded documents. Throws UsageError on a wrong
/// number or kind of documents, PreconditionError when the checker refuses
/// its input.
CheckReport run_check(std::string_view kind, const std::vector<Document>& docs, const CheckOptions& opt = {});

/// Runs one construction and re-validates the result. Throws UsageError,
/// PreconditionError (including a failed re-validation) or the construction's
/// own errors.
Document run_derive(std::string_view construction, const std::vector<Document>& docs);

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace postlie
