#include "ghosa/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "ghosa/error.hpp"

namespace ghosa::ingest {

using problems::KnapsackInstance;
using problems::QapInstance;
using problems::RoadEdge;
using problems::RoadNetwork;
using problems::TspInstance;
using problems::TspMetric;

namespace {

struct Token {
  std::string_view text;
  std::size_t line = 0;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<Token> split_tokens(std::string_view text, std::size_t first_line = 1) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\n') ++line;
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    out.push_back({text.substr(start, i - start), line});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

double to_double(const Token& t) {
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::NonNumericToken,
                fmt::format("line {}: '{}' is not a number", t.line, t.text));
  }
  return v;
}

std::int64_t to_int(const Token& t) {
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::NonNumericToken,
                fmt::format("line {}: '{}' is not an integer", t.line, t.text));
  }
  return v;
}

std::size_t to_count(const Token& t) {
  const auto v = to_int(t);
  if (v < 0) {
    throw Error(ErrorCode::CountMismatch, fmt::format("line {}: negative count {}", t.line, v));
  }
  return static_cast<std::size_t>(v);
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// ---- TSPLIB ---------------------------------------------------------------

bool starts_keyword(std::string_view line) {
  line = trim(line);
  return !line.empty() && std::isalpha(static_cast<unsigned char>(line.front()));
}

// Fills a symmetric matrix from the entries of a triangular or full format.
std::vector<double> expand_matrix(const std::string& format, const std::vector<double>& w,
                                  std::size_t n, std::size_t line) {
  std::vector<double> m(n * n, 0.0);
  std::size_t k = 0;
  auto need = [&](std::size_t count) {
    if (w.size() != count) {
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("line {}: {} expects {} weights for dimension {}, found {}", line,
                              format, count, n, w.size()));
    }
  };
  auto put = [&](std::size_t i, std::size_t j) {
    m[i * n + j] = w[k];
    m[j * n + i] = w[k];
    ++k;
  };
  // Column-wise layouts of one triangle list the entries in the row-wise order
  // of the other triangle.
  if (format == "FULL_MATRIX") {
    need(n * n);
    m = w;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m[i * n + j] != m[j * n + i]) {
          throw Error(ErrorCode::UnsupportedEdgeWeightType,
                      fmt::format("asymmetric FULL_MATRIX entry ({}, {})", i + 1, j + 1));
        }
      }
    }
  } else if (format == "UPPER_ROW" || format == "LOWER_COL") {
    need(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) put(i, j);
  } else if (format == "LOWER_ROW" || format == "UPPER_COL") {
    need(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) put(i, j);
  } else if (format == "UPPER_DIAG_ROW" || format == "LOWER_DIAG_COL") {
    need(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) put(i, j);
  } else if (format == "LOWER_DIAG_ROW" || format == "UPPER_DIAG_COL") {
    need(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) put(i, j);
  } else {
    throw Error(ErrorCode::UnsupportedEdgeWeightType,
                fmt::format("EDGE_WEIGHT_FORMAT {} not supported", format));
  }
  return m;
}

}  // namespace

std::string_view to_string(InstanceFormat format) {
  switch (format) {
    case InstanceFormat::Tsplib: return "tsplib";
    case InstanceFormat::Qaplib: return "qaplib";
    case InstanceFormat::OrlibMknap: return "orlib-mknap";
    case InstanceFormat::Roadnet: return "roadnet";
  }
  return "?";
}

std::optional<InstanceFormat> instance_format_from_string(std::string_view name) {
  for (auto f : {InstanceFormat::Tsplib, InstanceFormat::Qaplib, InstanceFormat::OrlibMknap,
                 InstanceFormat::Roadnet}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<InstanceFormat> guess_format(const std::filesystem::path& path) {
  const std::string ext = upper(path.extension().string());
  if (ext == ".TSP") return InstanceFormat::Tsplib;
  if (ext == ".DAT") return InstanceFormat::Qaplib;
  if (ext == ".TXT" || ext == ".MKNAP") return InstanceFormat::OrlibMknap;
  if (ext == ".ROAD") return InstanceFormat::Roadnet;
  return std::nullopt;
}

TspInstance parse_tsplib(std::string_view text, std::vector<std::string>* warnings) {
  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };

  TspInstance inst;
  std::optional<std::size_t> dimension;
  std::optional<std::string> weight_type;
  std::string weight_format;
  std::optional<std::vector<Token>> coord_tokens;
  std::optional<std::vector<Token>> weight_tokens;
  std::size_t weight_line = 0;

  const auto lines = split_lines(text);
  std::size_t li = 0;
  // Data tokens run until the next line that starts with a letter.
  auto section_tokens = [&]() {
    std::vector<Token> toks;
    while (li < lines.size() && !starts_keyword(lines[li])) {
      for (const auto& t : split_tokens(lines[li], li + 1)) toks.push_back(t);
      ++li;
    }
    return toks;
  };

  while (li < lines.size()) {
    const std::string_view raw = trim(lines[li]);
    const std::size_t lineno = li + 1;
    ++li;
    if (raw.empty()) continue;

    const auto colon = raw.find(':');
    const std::string key = upper(trim(raw.substr(0, colon)));
    const std::string_view value =
        colon == std::string_view::npos ? std::string_view{} : trim(raw.substr(colon + 1));

    if (key == "EOF") break;
    if (key == "NODE_COORD_SECTION") {
      coord_tokens = section_tokens();
    } else if (key == "EDGE_WEIGHT_SECTION") {
      weight_line = lineno;
      weight_tokens = section_tokens();
    } else if (key == "DISPLAY_DATA_SECTION") {
      section_tokens();
    } else if (key.size() > 8 && key.ends_with("_SECTION")) {
      warn(fmt::format("line {}: skipping {}", lineno, key));
      section_tokens();
    } else if (key == "NAME") {
      inst.name = std::string(value);
    } else if (key == "TYPE") {
      const std::string type = upper(value);
      if (type != "TSP") {
        throw Error(ErrorCode::UnsupportedEdgeWeightType,
                    fmt::format("line {}: problem TYPE {} is not a symmetric TSP", lineno, value));
      }
    } else if (key == "DIMENSION") {
      dimension = to_count(Token{value, lineno});
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = upper(value);
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = upper(value);
    } else if (key == "NODE_COORD_TYPE") {
      if (upper(value) != "TWOD_COORDS") {
        throw Error(ErrorCode::UnsupportedEdgeWeightType,
                    fmt::format("line {}: NODE_COORD_TYPE {} not supported", lineno, value));
      }
    } else if (key == "BEST_KNOWN") {
      inst.best_known = to_double(Token{value, lineno});
    } else if (key == "COMMENT" || key == "DISPLAY_DATA_TYPE") {
      // informational
    } else {
      warn(fmt::format("line {}: unknown key {} ignored", lineno, key));
    }
  }

  if (!dimension) throw Error(ErrorCode::MissingHeaderField, "DIMENSION");
  if (!weight_type) throw Error(ErrorCode::MissingHeaderField, "EDGE_WEIGHT_TYPE");
  const auto metric = problems::tsp_metric_from_string(*weight_type);
  if (!metric || *metric == TspMetric::Euclidean) {
    throw Error(ErrorCode::UnsupportedEdgeWeightType, *weight_type);
  }
  inst.n = *dimension;
  inst.metric = *metric;

  if (inst.metric == TspMetric::Explicit) {
    if (weight_format.empty()) throw Error(ErrorCode::MissingHeaderField, "EDGE_WEIGHT_FORMAT");
    if (!weight_tokens) throw Error(ErrorCode::MissingHeaderField, "EDGE_WEIGHT_SECTION");
    std::vector<double> w;
    w.reserve(weight_tokens->size());
    for (const auto& t : *weight_tokens) w.push_back(to_double(t));
    inst.matrix = expand_matrix(weight_format, w, inst.n, weight_line);
    return inst;
  }

  if (!coord_tokens) throw Error(ErrorCode::MissingHeaderField, "NODE_COORD_SECTION");
  const auto& toks = *coord_tokens;
  if (toks.size() % 3 != 0 || toks.size() / 3 != inst.n) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("DIMENSION is {} but NODE_COORD_SECTION holds {} values ({} nodes)",
                            inst.n, toks.size(), toks.size() / 3.0));
  }
  inst.coords.assign(inst.n, {0.0, 0.0});
  std::vector<bool> seen(inst.n, false);
  for (std::size_t k = 0; k < toks.size(); k += 3) {
    const auto id = to_int(toks[k]);
    if (id < 1 || static_cast<std::size_t>(id) > inst.n || seen[static_cast<std::size_t>(id - 1)]) {
      throw Error(ErrorCode::DimensionMismatch,
                  fmt::format("line {}: node id {} outside 1..{} or repeated", toks[k].line, id,
                              inst.n));
    }
    seen[static_cast<std::size_t>(id - 1)] = true;
    inst.coords[static_cast<std::size_t>(id - 1)] = {to_double(toks[k + 1]), to_double(toks[k + 2])};
  }
  return inst;
}

// ---- QAPLIB ---------------------------------------------------------------

QapInstance parse_qaplib(std::string_view text) {
  const auto toks = split_tokens(text);
  if (toks.empty()) throw Error(ErrorCode::TruncatedMatrix, "empty input, expected n");
  QapInstance inst;
  inst.n = to_count(toks[0]);
  const std::size_t nn = inst.n * inst.n;
  std::size_t k = 1;
  auto read_matrix = [&](std::vector<std::int64_t>& out, const char* which) {
    out.reserve(nn);
    for (std::size_t i = 0; i < nn; ++i, ++k) {
      if (k >= toks.size()) {
        throw Error(ErrorCode::TruncatedMatrix,
                    fmt::format("{} matrix has {} of {} entries", which, i, nn));
      }
      out.push_back(to_int(toks[k]));
    }
  };
  read_matrix(inst.flow, "first");
  read_matrix(inst.dist, "second");
  if (k < toks.size()) {
    throw Error(ErrorCode::TruncatedMatrix,
                fmt::format("line {}: {} tokens beyond the second matrix", toks[k].line,
                            toks.size() - k));
  }
  return inst;
}

// ---- OR-Library mknap -----------------------------------------------------

std::vector<KnapsackInstance> parse_orlib_mknap(std::string_view text) {
  const auto toks = split_tokens(text);
  std::size_t k = 0;
  auto next = [&](const char* what) -> const Token& {
    if (k >= toks.size()) {
      throw Error(ErrorCode::TruncatedSection, fmt::format("input ends while reading {}", what));
    }
    return toks[k++];
  };

  const std::size_t count = to_count(next("the problem count"));
  std::vector<KnapsackInstance> out;
  out.reserve(count);
  for (std::size_t p = 0; p < count; ++p) {
    KnapsackInstance inst;
    inst.name = fmt::format("mknap-{}", p + 1);
    inst.n = to_count(next("n"));
    inst.m = to_count(next("m"));
    const double opt = to_double(next("the optimum"));
    if (opt != 0.0) inst.best_known = opt;

    for (std::size_t i = 0; i < inst.n; ++i) inst.profit.push_back(to_double(next("profits")));
    for (std::size_t i = 0; i < inst.m * inst.n; ++i) {
      inst.weight.push_back(to_double(next("constraint rows")));
    }
    for (std::size_t i = 0; i < inst.m; ++i) {
      if (k >= toks.size() && i > 0) {
        throw Error(ErrorCode::CountMismatch,
                    fmt::format("problem {} declares {} constraints but lists {} capacities", p + 1,
                                inst.m, i));
      }
      inst.capacity.push_back(to_double(next("capacities")));
    }
    out.push_back(std::move(inst));
  }
  if (k < toks.size()) {
    throw Error(ErrorCode::CountMismatch,
                fmt::format("line {}: data beyond the {} declared problems", toks[k].line, count));
  }
  return out;
}

// ---- road networks --------------------------------------------------------

RoadNetwork parse_roadnet(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  std::size_t lineno = 0;
  for (auto line : split_lines(text)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto toks = split_tokens(line, lineno);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  if (rows.size() < 2) {
    throw Error(ErrorCode::TruncatedSection, "expected a node line and a V source destination trailer");
  }

  RoadNetwork net;
  std::unordered_map<std::int64_t, int> ids;
  for (const auto& t : rows.front()) {
    const auto label = to_int(t);
    if (!ids.emplace(label, static_cast<int>(net.labels.size()) + 1).second) {
      throw Error(ErrorCode::CountMismatch,
                  fmt::format("line {}: node {} declared twice", t.line, label));
    }
    net.labels.push_back(label);
  }
  auto node = [&](const Token& t) {
    const auto it = ids.find(to_int(t));
    if (it == ids.end()) {
      throw Error(ErrorCode::UnknownNodeReference,
                  fmt::format("line {}: node {} is not declared", t.line, t.text));
    }
    return it->second;
  };

  const auto& trailer = rows.back();
  if (trailer.size() != 3) {
    throw Error(ErrorCode::TruncatedSection,
                fmt::format("line {}: last line must be 'V source destination'", trailer[0].line));
  }
  std::optional<std::size_t> resource_count;
  for (std::size_t r = 1; r + 1 < rows.size(); ++r) {
    const auto& row = rows[r];
    if (upper(row[0].text) == "CAPS") {
      if (!net.resource_caps.empty()) {
        throw Error(ErrorCode::CountMismatch, fmt::format("line {}: second CAPS line", row[0].line));
      }
      for (std::size_t i = 1; i < row.size(); ++i) net.resource_caps.push_back(to_double(row[i]));
      continue;
    }
    if (row.size() < 4) {
      throw Error(ErrorCode::TruncatedSection,
                  fmt::format("line {}: edge needs 'u v D AWT'", row[0].line));
    }
    RoadEdge e;
    e.from = node(row[0]);
    e.to = node(row[1]);
    e.distance = to_double(row[2]);
    e.awt = to_double(row[3]);
    for (std::size_t i = 4; i < row.size(); ++i) e.resources.push_back(to_double(row[i]));
    if (resource_count && *resource_count != e.resources.size()) {
      throw Error(ErrorCode::CountMismatch,
                  fmt::format("line {}: {} resource values, earlier edges have {}", row[0].line,
                              e.resources.size(), *resource_count));
    }
    resource_count = e.resources.size();
    net.edges.push_back(std::move(e));
  }
  const std::size_t per_edge = resource_count.value_or(0);
  if (!net.resource_caps.empty() && net.resource_caps.size() != per_edge) {
    throw Error(ErrorCode::CountMismatch,
                fmt::format("{} caps for {} resources per edge", net.resource_caps.size(), per_edge));
  }

  net.velocity = to_double(trailer[0]);
  if (!(net.velocity > 0.0)) {
    throw Error(ErrorCode::NonPositiveVelocity,
                fmt::format("line {}: V = {}", trailer[0].line, trailer[0].text));
  }
  net.source = node(trailer[1]);
  net.destination = node(trailer[2]);
  net.validate();
  net.index();

  // Breadth-first reachability of the destination.
  std::vector<std::vector<int>> out(net.node_count() + 1);
  for (const auto& e : net.edges) out[static_cast<std::size_t>(e.from)].push_back(e.to);
  std::vector<bool> seen(net.node_count() + 1, false);
  std::queue<int> q;
  q.push(net.source);
  seen[static_cast<std::size_t>(net.source)] = true;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : out[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        q.push(v);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(net.destination)]) {
    throw Error(ErrorCode::Disconnected, "destination is unreachable from source");
  }
  return net;
}

// ---- serializers ----------------------------------------------------------

std::string serialize_tsplib(const TspInstance& inst) {
  if (inst.metric == TspMetric::Euclidean) {
    throw Error(ErrorCode::UnsupportedEdgeWeightType, "EUCLIDEAN is an override, not a file type");
  }
  std::string out;
  auto it = std::back_inserter(out);
  if (!inst.name.empty()) fmt::format_to(it, "NAME : {}\n", inst.name);
  fmt::format_to(it, "TYPE : TSP\nDIMENSION : {}\nEDGE_WEIGHT_TYPE : {}\n", inst.n,
                 problems::to_string(inst.metric));
  if (inst.best_known) fmt::format_to(it, "BEST_KNOWN : {}\n", *inst.best_known);
  if (inst.metric == TspMetric::Explicit) {
    fmt::format_to(it, "EDGE_WEIGHT_FORMAT : FULL_MATRIX\nEDGE_WEIGHT_SECTION\n");
    for (std::size_t i = 0; i < inst.n; ++i) {
      for (std::size_t j = 0; j < inst.n; ++j) {
        fmt::format_to(it, "{}{}", j ? " " : "", inst.matrix[i * inst.n + j]);
      }
      out += '\n';
    }
  } else {
    out += "NODE_COORD_SECTION\n";
    for (std::size_t i = 0; i < inst.coords.size(); ++i) {
      fmt::format_to(it, "{} {} {}\n", i + 1, inst.coords[i][0], inst.coords[i][1]);
    }
  }
  out += "EOF\n";
  return out;
}

std::string serialize_qaplib(const QapInstance& inst) {
  std::string out = fmt::format("{}\n", inst.n);
  auto it = std::back_inserter(out);
  for (const auto* m : {&inst.flow, &inst.dist}) {
    out += '\n';
    for (std::size_t i = 0; i < inst.n; ++i) {
      for (std::size_t j = 0; j < inst.n; ++j) {
        fmt::format_to(it, "{}{}", j ? " " : "", (*m)[i * inst.n + j]);
      }
      out += '\n';
    }
  }
  return out;
}

std::string serialize_orlib_mknap(const std::vector<KnapsackInstance>& instances) {
  std::string out = fmt::format("{}\n", instances.size());
  auto it = std::back_inserter(out);
  auto row = [&](auto first, auto last) {
    for (auto p = first; p != last; ++p) fmt::format_to(it, "{}{}", p == first ? "" : " ", *p);
    out += '\n';
  };
  for (const auto& inst : instances) {
    fmt::format_to(it, "{} {} {}\n", inst.n, inst.m, inst.best_known.value_or(0.0));
    row(inst.profit.begin(), inst.profit.end());
    for (std::size_t r = 0; r < inst.m; ++r) {
      row(inst.weight.begin() + static_cast<std::ptrdiff_t>(r * inst.n),
          inst.weight.begin() + static_cast<std::ptrdiff_t>((r + 1) * inst.n));
    }
    row(inst.capacity.begin(), inst.capacity.end());
  }
  return out;
}

std::string serialize_roadnet(const RoadNetwork& net) {
  std::string out;
  auto it = std::back_inserter(out);
  for (std::size_t i = 0; i < net.labels.size(); ++i) {
    fmt::format_to(it, "{}{}", i ? " " : "", net.labels[i]);
  }
  out += '\n';
  auto label = [&](int idx) { return net.labels[static_cast<std::size_t>(idx - 1)]; };
  for (const auto& e : net.edges) {
    fmt::format_to(it, "{} {} {} {}", label(e.from), label(e.to), e.distance, e.awt);
    for (double r : e.resources) fmt::format_to(it, " {}", r);
    out += '\n';
  }
  if (!net.resource_caps.empty()) {
    out += "CAPS";
    for (double c : net.resource_caps) fmt::format_to(it, " {}", c);
    out += '\n';
  }
  fmt::format_to(it, "{} {} {}\n", net.velocity, label(net.source), label(net.destination));
  return out;
}

// ---- files ----------------------------------------------------------------

std::uint64_t checksum(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string checksum_hex(std::uint64_t sum) { return fmt::format("{:016x}", sum); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  return buf.str();
}

InstanceFileRecord parse_instance(std::string_view text, InstanceFormat format,
                                  std::filesystem::path path) {
  InstanceFileRecord rec;
  rec.path = std::move(path);
  rec.format = format;
  rec.checksum = checksum(text);
  const std::string stem = rec.path.stem().string();
  switch (format) {
    case InstanceFormat::Tsplib: {
      auto inst = parse_tsplib(text, &rec.warnings);
      if (inst.name.empty()) inst.name = stem;
      rec.payload = std::move(inst);
      break;
    }
    case InstanceFormat::Qaplib: {
      auto inst = parse_qaplib(text);
      inst.name = stem;
      rec.payload = std::move(inst);
      break;
    }
    case InstanceFormat::OrlibMknap: {
      auto list = parse_orlib_mknap(text);
      if (!stem.empty()) {
        for (std::size_t i = 0; i < list.size(); ++i) {
          list[i].name = list.size() == 1 ? stem : fmt::format("{}-{}", stem, i + 1);
        }
      }
      rec.payload = std::move(list);
      break;
    }
    case InstanceFormat::Roadnet: rec.payload = parse_roadnet(text); break;
  }
  return rec;
}

InstanceFileRecord load_instance(const std::filesystem::path& path,
                                 std::optional<InstanceFormat> format) {
  if (!format) format = guess_format(path);
  if (!format) {
    throw Error(ErrorCode::InvalidConfig, "cannot infer the format of " + path.string());
  }
  return parse_instance(read_file(path), *format, path);
}

}  // namespace ghosa::ingest
