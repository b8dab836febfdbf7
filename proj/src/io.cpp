#include "msm/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace msm {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string next_line(std::istream& in, const char* context) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(std::string("unexpected end of file in ") + context);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_double(const std::string& token, const char* context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw DataError("");
    return v;
  } catch (const std::exception&) {
    throw DataError(std::string(context) + ": bad number '" + token + "'");
  }
}

long parse_long(const std::string& token, const char* context) {
  try {
    std::size_t used = 0;
    const long v = std::stol(token, &used);
    if (used != token.size()) throw DataError("");
    return v;
  } catch (const std::exception&) {
    throw DataError(std::string(context) + ": bad integer '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  return out;
}

std::vector<int> parse_permutation(const std::vector<std::string>& tokens, std::size_t offset,
                                   int n, const char* context) {
  if (tokens.size() != offset + static_cast<std::size_t>(n))
    throw DataError(std::string(context) + ": expected " + std::to_string(n) + " indices");
  std::vector<int> map(n);
  for (int t = 0; t < n; ++t)
    map[t] = static_cast<int>(parse_long(tokens[offset + t], context));
  return map;
}

}  // namespace

Dataset read_msmf(std::istream& in) {
  if (next_line(in, "header") != "MSMF1") throw DataError("not an MSMF file (missing MSMF1 magic)");

  Dataset data;
  std::string line = next_line(in, "header");
  if (line.rfind("meta ", 0) == 0) {
    data.provenance = line.substr(5);
    line = next_line(in, "header");
  }

  auto tokens = split(line);
  if (tokens.size() != 2 || tokens[0] != "dim") throw DataError("expected 'dim <D>'");
  const int dim = static_cast<int>(parse_long(tokens[1], "dim"));

  tokens = split(next_line(in, "header"));
  if (tokens.size() != 2 || tokens[0] != "sets") throw DataError("expected 'sets <N>'");
  const int n_sets = static_cast<int>(parse_long(tokens[1], "sets"));
  if (dim < 1 || n_sets < 1) throw DataError("dim and sets must be >= 1");

  for (int s = 0; s < n_sets; ++s) {
    tokens = split(next_line(in, "set header"));
    if (tokens.size() != 3 || tokens[0] != "set") throw DataError("expected 'set <index> <n>'");
    if (parse_long(tokens[1], "set index") != s) throw DataError("set blocks must appear in order");
    const int n = static_cast<int>(parse_long(tokens[2], "set size"));
    if (n < 1) throw DataError("set size must be >= 1");

    FeatureMatrix fm(dim, n, s);
    for (int t = 0; t < n; ++t) {
      const auto values = split(next_line(in, "feature row"));
      if (static_cast<int>(values.size()) != dim)
        throw DataError("feature row has wrong attribute count");
      for (int d = 0; d < dim; ++d) fm.at(t, d) = parse_double(values[d], "feature");
    }
    fm.validate();
    data.sets.push_back(std::move(fm));
  }

  line = next_line(in, "trailer");
  if (line == "truth") {
    GroundTruth truth;
    for (int s = 0; s < n_sets; ++s) {
      tokens = split(next_line(in, "truth row"));
      if (static_cast<int>(tokens.size()) != data.sets[s].node_count())
        throw DataError("truth row has wrong label count");
      std::vector<int> labels(tokens.size());
      for (std::size_t t = 0; t < tokens.size(); ++t)
        labels[t] = static_cast<int>(parse_long(tokens[t], "truth"));
      truth.labels.push_back(std::move(labels));
    }
    data.truth = std::move(truth);
    line = next_line(in, "trailer");
  }
  if (line != "end") throw DataError("expected 'end'");
  return data;
}

void write_msmf(std::ostream& out, const Dataset& data) {
  out << "MSMF1\n";
  if (!data.provenance.empty()) out << "meta " << data.provenance << "\n";
  const int dim = data.sets.empty() ? 1 : data.sets[0].dim();
  out << "dim " << dim << "\n";
  out << "sets " << data.sets.size() << "\n";
  for (std::size_t s = 0; s < data.sets.size(); ++s) {
    const auto& fm = data.sets[s];
    out << "set " << s << " " << fm.node_count() << "\n";
    for (int t = 0; t < fm.node_count(); ++t) {
      for (int d = 0; d < fm.dim(); ++d) {
        if (d) out << " ";
        out << fmt_double(fm.at(t, d));
      }
      out << "\n";
    }
  }
  if (data.truth) {
    out << "truth\n";
    for (const auto& labels : data.truth->labels) {
      for (std::size_t t = 0; t < labels.size(); ++t) {
        if (t) out << " ";
        out << labels[t];
      }
      out << "\n";
    }
  }
  out << "end\n";
}

Dataset read_msmf_file(const std::string& path) {
  auto in = open_input(path);
  return read_msmf(in);
}

void write_msmf_file(const std::string& path, const Dataset& data) {
  auto out = open_output(path);
  write_msmf(out, data);
  if (!out) throw DataError("write to '" + path + "' failed");
}

MatchResult read_msmr(std::istream& in) {
  if (next_line(in, "header") != "MSMR1") throw DataError("not an MSMR file (missing MSMR1 magic)");
  auto tokens = split(next_line(in, "header"));
  MatchResult result;

  if (!tokens.empty() && tokens[0] == "star") {
    if (tokens.size() != 4) throw DataError("expected 'star <reference> <N> <n>'");
    StarConfiguration star;
    star.reference = static_cast<int>(parse_long(tokens[1], "star"));
    const int n_sets = static_cast<int>(parse_long(tokens[2], "star"));
    star.node_count = static_cast<int>(parse_long(tokens[3], "star"));
    if (n_sets < 2 || star.reference < 0 || star.reference >= n_sets)
      throw DataError("star header out of range");
    star.maps.assign(n_sets, Correspondence::identity(star.node_count));
    for (int i = 0; i < n_sets; ++i) {
      if (i == star.reference) continue;
      tokens = split(next_line(in, "map row"));
      if (tokens.size() < 2 || tokens[0] != "map") throw DataError("expected 'map <i> ...'");
      if (parse_long(tokens[1], "map") != i) throw DataError("map rows must appear in set order");
      try {
        star.maps[i] = Correspondence(parse_permutation(tokens, 2, star.node_count, "map"));
      } catch (const std::invalid_argument& e) {
        throw DataError(std::string("map row: ") + e.what());
      }
    }
    star.validate();
    result.star = std::move(star);
  } else if (!tokens.empty() && tokens[0] == "full") {
    if (tokens.size() != 3) throw DataError("expected 'full <N> <n>'");
    const int n_sets = static_cast<int>(parse_long(tokens[1], "full"));
    const int n = static_cast<int>(parse_long(tokens[2], "full"));
    if (n_sets < 2 || n < 1) throw DataError("full header out of range");
    MatchConfiguration config(n_sets, n);
    for (int i = 0; i < n_sets - 1; ++i) {
      for (int j = i + 1; j < n_sets; ++j) {
        tokens = split(next_line(in, "pair row"));
        if (tokens.size() < 3 || tokens[0] != "pair") throw DataError("expected 'pair <i> <j> ...'");
        if (parse_long(tokens[1], "pair") != i || parse_long(tokens[2], "pair") != j)
          throw DataError("pair rows must appear in lexicographic order");
        try {
          config.set_pair(i, j, Correspondence(parse_permutation(tokens, 3, n, "pair")));
        } catch (const std::invalid_argument& e) {
          throw DataError(std::string("pair row: ") + e.what());
        }
      }
    }
    result.config = std::move(config);
  } else {
    throw DataError("expected 'star' or 'full' result header");
  }

  if (next_line(in, "trailer") != "end") throw DataError("expected 'end'");
  return result;
}

void write_msmr(std::ostream& out, const MatchResult& result) {
  out << "MSMR1\n";
  if (result.star) {
    const auto& star = *result.star;
    out << "star " << star.reference << " " << star.maps.size() << " " << star.node_count << "\n";
    for (std::size_t i = 0; i < star.maps.size(); ++i) {
      if (static_cast<int>(i) == star.reference) continue;
      out << "map " << i;
      for (const int v : star.maps[i].mapping()) out << " " << v;
      out << "\n";
    }
  } else if (result.config) {
    const auto& config = *result.config;
    out << "full " << config.set_count() << " " << config.node_count() << "\n";
    for (int i = 0; i < config.set_count() - 1; ++i) {
      for (int j = i + 1; j < config.set_count(); ++j) {
        out << "pair " << i << " " << j;
        for (const int v : config.pair(i, j).mapping()) out << " " << v;
        out << "\n";
      }
    }
  } else {
    throw DataError("write_msmr: empty result");
  }
  out << "end\n";
}

MatchResult read_msmr_file(const std::string& path) {
  auto in = open_input(path);
  return read_msmr(in);
}

void write_msmr_file(const std::string& path, const MatchResult& result) {
  auto out = open_output(path);
  write_msmr(out, result);
  if (!out) throw DataError("write to '" + path + "' failed");
}

std::string csv_header() {
  return "method,n_sets,n_inliers,n_outliers,epsilon,seed,accuracy,runtime_ms,mean_Cu,clustering_error";
}

std::string csv_row(const TrialReport& r) {
  std::ostringstream out;
  out << r.method << "," << r.n_sets << "," << r.n_inliers << "," << r.n_outliers << ","
      << fmt_double(r.epsilon) << "," << r.seed << "," << fmt_double(r.accuracy) << ","
      << fmt_double(r.runtime_ms) << "," << fmt_double(r.mean_unary_consistency) << ","
      << fmt_double(r.clustering_error);
  return out.str();
}

bool is_ragged(const Dataset& data) {
  if (data.sets.empty()) return false;
  const int n = data.sets[0].node_count();
  return std::any_of(data.sets.begin(), data.sets.end(),
                     [n](const FeatureMatrix& s) { return s.node_count() != n; });
}

void pad_dataset(Dataset& data) {
  if (data.sets.empty()) return;
  int target = 0;
  for (const auto& s : data.sets) target = std::max(target, s.node_count());
  for (std::size_t i = 0; i < data.sets.size(); ++i) {
    const int missing = target - data.sets[i].node_count();
    if (missing == 0) continue;
    data.sets[i].append_dummy_nodes(missing);
    if (data.truth)
      data.truth->labels[i].resize(target, GroundTruth::kOutlier);
  }
}

}  // namespace msm
