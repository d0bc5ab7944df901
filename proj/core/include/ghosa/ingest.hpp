#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ghosa/problems/knapsack.hpp"
#include "ghosa/problems/qap.hpp"
#include "ghosa/problems/road.hpp"
#include "ghosa/problems/tsp.hpp"

namespace ghosa::ingest {

enum class InstanceFormat { Tsplib, Qaplib, OrlibMknap, Roadnet };

std::string_view to_string(InstanceFormat format);
std::optional<InstanceFormat> instance_format_from_string(std::string_view name);
// By extension: .tsp, .dat, .txt/.mknap, .road.
std::optional<InstanceFormat> guess_format(const std::filesystem::path& path);

// Parsers are pure and accept any whitespace layout. Errors carry line numbers.

// Unknown header keys are skipped; a note is appended to `warnings` if given.
// Throws MissingHeaderField, DimensionMismatch, UnsupportedEdgeWeightType,
// NonNumericToken.
problems::TspInstance parse_tsplib(std::string_view text,
                                   std::vector<std::string>* warnings = nullptr);

// "n", then the two n*n matrices. Throws TruncatedMatrix, NonNumericToken.
problems::QapInstance parse_qaplib(std::string_view text);

// OR-Library mknap layout: problem count K, then per problem "n m opt", n
// profits, m rows of n weights and m capacities. An opt of 0 means unknown.
// Throws TruncatedSection, CountMismatch, NonNumericToken.
std::vector<problems::KnapsackInstance> parse_orlib_mknap(std::string_view text);

// Line format ('#' starts a comment):
//   <node id> <node id> ...              first line: declared nodes
//   <u> <v> <D> <AWT> [r1 r2 ...]        one directed edge per line
//   CAPS <c1> <c2> ...                   optional resource caps
//   <V> <source> <destination>           trailer
// Throws UnknownNodeReference, NonPositiveVelocity, Disconnected (destination
// unreachable), TruncatedSection, CountMismatch, NonNumericToken.
problems::RoadNetwork parse_roadnet(std::string_view text);

// Canonical text; parsing it back yields an identical instance.
std::string serialize_tsplib(const problems::TspInstance& inst);
std::string serialize_qaplib(const problems::QapInstance& inst);
std::string serialize_orlib_mknap(const std::vector<problems::KnapsackInstance>& instances);
std::string serialize_roadnet(const problems::RoadNetwork& net);

// 64-bit FNV-1a over the raw bytes.
std::uint64_t checksum(std::string_view bytes);
std::string checksum_hex(std::uint64_t sum);

using Payload = std::variant<problems::TspInstance, problems::QapInstance,
                             std::vector<problems::KnapsackInstance>, problems::RoadNetwork>;

struct InstanceFileRecord {
  std::filesystem::path path;
  InstanceFormat format = InstanceFormat::Tsplib;
  std::uint64_t checksum = 0;
  Payload payload;
  std::vector<std::string> warnings;
};

// Throws IoFailure on unreadable files plus the parser's errors.
std::string read_file(const std::filesystem::path& path);
InstanceFileRecord load_instance(const std::filesystem::path& path,
                                 std::optional<InstanceFormat> format = {});
InstanceFileRecord parse_instance(std::string_view text, InstanceFormat format,
                                  std::filesystem::path path = {});

}  // namespace ghosa::ingest
