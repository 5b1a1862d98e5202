#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/obstruction.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/witness.hpp"

namespace ncalg {

/// A finitely presented algebra as read from a presentation file.
///
///   # comment
///   field Q                      | field Fp 7
///   gens x y                     declaration order is the letter order
///   order y x                    optional: override the letter order
///   truncate 8                   optional: truncated mode with this cap
///   rel y*x*y - x                oriented by deglex (yxy -> x)
///   rule x -> y*x*x*y            explicit orientation
///   witness x=x y=y z=x*y*x a=y b=y*x
struct Presentation {
  RewriteSystem system;
  std::optional<LemmaWitness> witness;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);

/// JSON document {"field": "Fp:101", "n": 2, "assign": {"x": [row-major ints], ...}}.
/// Entries are reduced into the field; the field must match the system's.
Assignment parse_assignment(std::string_view json_text, const RewriteSystem& sys);
Assignment load_assignment(const std::filesystem::path& path, const RewriteSystem& sys);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace ncalg
