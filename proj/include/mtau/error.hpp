#pragma once

#include <stdexcept>
#include <string>

namespace mtau {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed literal, identity, presentation or monoid spec.
  class SyntaxError : public Error {
   public:
    using Error::Error;
  };

  // A tau-word literal that is not in canonical (reduced) form.
  class NotReducedError : public Error {
   public:
    NotReducedError(std::string const& literal, std::string reduced)
        : Error("'" + literal + "' is not reduced; did you mean '" + reduced
                + "'?"),
          _reduced(std::move(reduced)) {}

    std::string const& reduced() const noexcept {
      return _reduced;
    }

   private:
    std::string _reduced;
  };

  // A bare letter where only starred segments are legal (tau_1 mode), or a
  // starred segment where none is legal (trivial congruence).
  class IllegalSegmentError : public Error {
   public:
    using Error::Error;
  };

  // The congruence is not supported by the requested operation.
  class UnsupportedKindError : public Error {
   public:
    using Error::Error;
  };

  class KindMismatchError : public Error {
   public:
    using Error::Error;
  };

  // Completion or enumeration of a presentation exceeded its limits.
  class CapExceededError : public Error {
   public:
    using Error::Error;
  };

}  // namespace mtau
