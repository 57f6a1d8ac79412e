#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dtopo/error.hpp"
#include "dtopo/poset.hpp"

namespace dtopo {
namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

FaceId parse_id(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative face id, got '" + token + "'");
  try {
    unsigned long v = std::stoul(token);
    if (v > 0xffffffffu) throw std::out_of_range("id");
    return static_cast<FaceId>(v);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "face id out of range: " + token);
  }
}

struct Record {
  std::size_t line = 0;
  std::string label;
  std::vector<FaceId> covered;
};

}  // namespace

Poset read_hasse(std::istream& in) {
  std::vector<std::optional<Record>> records;
  std::optional<int> declared_rank;
  std::size_t declared_line = 0;
  bool any_label = false;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ss(strip_comment(raw));
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "rank") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'rank <n>'");
      if (declared_rank) throw ParseError(lineno, "duplicate rank line");
      try {
        std::size_t used = 0;
        declared_rank = std::stoi(tok[1], &used);
        if (used != tok[1].size()) throw std::invalid_argument("rank");
      } catch (const std::exception&) {
        throw ParseError(lineno, "invalid rank '" + tok[1] + "'");
      }
      declared_line = lineno;
      continue;
    }
    if (tok[0] != "f")
      throw ParseError(lineno, "unknown record '" + tok[0] + "' (expected 'f' or 'rank')");
    if (tok.size() < 3) throw ParseError(lineno, "expected 'f <id> [<label>] : <covered-id>*'");

    const FaceId id = parse_id(tok[1], lineno);
    Record rec;
    rec.line = lineno;
    std::size_t colon = 2;
    if (tok[2] != ":") {
      rec.label = tok[2];
      any_label = true;
      colon = 3;
    }
    if (colon >= tok.size() || tok[colon] != ":")
      throw ParseError(lineno, "missing ':' after face id");
    for (std::size_t i = colon + 1; i < tok.size(); ++i)
      rec.covered.push_back(parse_id(tok[i], lineno));

    if (id >= records.size()) records.resize(static_cast<std::size_t>(id) + 1);
    if (records[id]) throw ParseError(lineno, "duplicate face id " + std::to_string(id));
    records[id] = std::move(rec);
  }

  const std::size_t n = records.size();
  std::vector<std::vector<FaceId>> below(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!records[i])
      throw ParseError(lineno, "face ids are not dense: id " + std::to_string(i) + " missing");
    for (FaceId c : records[i]->covered)
      if (c >= n)
        throw ParseError(records[i]->line, "covered id " + std::to_string(c) + " is undefined");
    below[i] = records[i]->covered;
    if (any_label) labels.push_back(records[i]->label);
  }

  Poset p = [&] {
    try {
      return Poset(std::move(below), std::move(labels));
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
  }();
  if (declared_rank && *declared_rank != p.rank())
    throw ParseError(declared_line, "declared rank " + std::to_string(*declared_rank) +
                                        " but the poset has rank " + std::to_string(p.rank()));
  return p;
}

void write_hasse(std::ostream& out, const Poset& p) {
  out << "rank " << p.rank() << '\n';
  for (FaceId h = 0; h < p.size(); ++h) {
    out << "f " << h;
    std::string label(p.label(h));
    if (!label.empty()) {
      for (char& c : label)
        if (c == ' ' || c == '\t' || c == ':' || c == '#') c = '_';
      out << ' ' << label;
    }
    out << " :";
    for (FaceId c : p.covers(h)) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace dtopo
