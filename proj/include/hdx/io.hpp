#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hdx/complex.hpp"

namespace hdx {

/// ".cx": '#' comment lines, one maximal face per nonblank line, vertex tokens
/// separated by whitespace. ".types": lines "vertex_token type".
Complex parse_complex(const std::string& text, const std::string& source = "<string>");
std::vector<int> parse_types(const Complex& X, const std::string& text, const std::string& source = "<string>");

std::string format_complex(const Complex& X);
std::string format_types(const Complex& X, const std::vector<int>& types);

Complex load_complex(const std::filesystem::path& path);
void save_complex(const Complex& X, const std::filesystem::path& path);

std::vector<int> load_types(const Complex& X, const std::filesystem::path& path);
void save_types(const Complex& X, const std::vector<int>& types, const std::filesystem::path& path);

/// `path` with its extension replaced by ".types".
std::filesystem::path types_sidecar(const std::filesystem::path& path);

/// Reads the sidecar next to `path` when one exists.
std::optional<std::vector<int>> load_sidecar_types(const Complex& X, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace hdx
