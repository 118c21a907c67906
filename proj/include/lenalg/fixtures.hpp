#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lenalg/document.hpp"

namespace lenalg {

struct FixtureInfo {
  std::string name;
  std::string summary;
};

const std::vector<FixtureInfo>& fixture_list();

// The named document, optionally re-read over another field.
Document make_fixture(std::string_view name, const std::optional<FieldSpec>& field = std::nullopt);

// The embedded JSON text.
std::string_view fixture_source(std::string_view name);

}  // namespace lenalg
