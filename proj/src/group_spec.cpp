#include "tracegeo/group_spec.hpp"

#include <cctype>
#include <fstream>

#include "tracegeo/error.hpp"

namespace tracegeo {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  bool consume(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  int number(const char* what) {
    const std::size_t start = pos_;
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return static_cast<int>(v);
  }

  std::string rest() {
    std::string r(s_.substr(pos_));
    pos_ = s_.size();
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Series series_from(char c, std::size_t at) {
  if (c < 'A' || c > 'G') throw ParseError(std::string("unknown series '") + c + "'", at);
  return static_cast<Series>(c - 'A');
}

}  // namespace

ParsedGroupSpec parse_group_spec(std::string_view text) {
  Cursor cur(text);
  ParsedGroupSpec out;
  if (cur.done()) throw ParseError("empty group spec", 0);

  if (cur.consume("T")) {
    out.spec.torus_rank = cur.number("torus rank");
    if (out.spec.torus_rank == 0) throw ParseError("pure torus needs positive rank", 1);
  } else {
    for (;;) {
      const std::size_t at = cur.pos();
      if (cur.done()) throw ParseError("expected a factor", at);
      const Series series = series_from(cur.peek(), at);
      cur.consume(std::string_view(&text[at], 1));
      const int rank = cur.number("rank");
      try {
        out.spec.factors.emplace_back(series, rank);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), at);
      }
      if (!cur.consume("x")) break;
    }
    if (cur.consume("+T")) out.spec.torus_rank = cur.number("torus rank");
  }

  while (!cur.done()) {
    const std::size_t at = cur.pos();
    if (cur.consume("@res=")) {
      const std::size_t num_at = cur.pos();
      out.spec.restriction_degree = cur.number("restriction degree");
      if (out.spec.restriction_degree < 1) throw ParseError("restriction degree must be >= 1", num_at);
    } else if (cur.consume("@relative=")) {
      const std::size_t path_at = cur.pos();
      std::string path = cur.rest();
      if (path.empty()) throw ParseError("empty relative datum path", path_at);
      out.relative_path = std::move(path);
    } else {
      throw ParseError(std::string("unexpected character '") + cur.peek() + "'", at);
    }
  }
  return out;
}

std::string render(const ParsedGroupSpec& p) {
  std::string s;
  for (std::size_t i = 0; i < p.spec.factors.size(); ++i) {
    if (i) s += "x";
    s += p.spec.factors[i].name();
  }
  if (p.spec.factors.empty())
    s += "T" + std::to_string(p.spec.torus_rank);
  else if (p.spec.torus_rank > 0)
    s += "+T" + std::to_string(p.spec.torus_rank);
  if (p.spec.restriction_degree > 1) s += "@res=" + std::to_string(p.spec.restriction_degree);
  if (p.relative_path) s += "@relative=" + *p.relative_path;
  return s;
}

RelativeDatum relative_datum_from_json(const nlohmann::json& j) {
  RelativeDatum rel;
  try {
    rel.simple_roots = j.at("simple_roots").get<std::vector<RootVector>>();
    rel.nilradical_dims = j.at("nilradical_dims").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed relative datum: ") + e.what());
  }
  return rel;
}

GroupSpec load_group_spec(std::string_view text) {
  ParsedGroupSpec parsed = parse_group_spec(text);
  if (parsed.relative_path) {
    std::ifstream in(*parsed.relative_path);
    if (!in) throw DomainError("cannot open relative datum file '" + *parsed.relative_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("relative datum is not valid JSON: ") + e.what());
    }
    parsed.spec.relative = relative_datum_from_json(j);
  }
  validate(parsed.spec);
  return parsed.spec;
}

}  // namespace tracegeo
