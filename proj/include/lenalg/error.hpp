#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lenalg {

enum class Errc {
  NonPrimeModulus,
  ReducibleModulus,
  UnsupportedExtension,
  DivisionByZero,
  CharacteristicTwo,
  CharacteristicNotTwo,
  DimensionMismatch,
  SingularMatrix,
  NotAnIdentity,
  NoIdentity,
  CapExceeded,
  InfiniteFieldUnsupported,
  BudgetExceeded,
  ModeCharacteristicMismatch,
  UnknownFixture,
  SchemaError,
  ScalarSyntaxError,
  CertificateInvalid,
  Internal,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lenalg
