#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace mtau {

  // The fixtures file compiled into the library.
  std::string_view verify_fixtures();

  struct VerifyOptions {
    std::string   section = "all";  // all, s4, s5, s7 or s8
    std::uint64_t seed    = 0;      // random words for the confluence check
    std::size_t   jobs    = 1;
  };

  // Runs every fixture of the selected section.  The report lists one entry
  // per fixture with "pass" and details, and an overall "pass".  Throws
  // Error for an unknown section or a malformed fixture.
  nlohmann::json run_verify(VerifyOptions const& options,
                            std::string_view     fixtures = verify_fixtures());

}  // namespace mtau
