#include "strateq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace strateq {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool blank(const std::string& line) { return tokens(line).empty(); }

std::size_t parse_count(const std::string& tok, const char* what) {
  Integer v;
  if (v.set_str(tok, 10) != 0 || v < 1 || !v.fits_ulong_p())
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  return v.get_ui();
}

template <class T>
T parse_scalar(const std::string& tok);
template <>
Rational parse_scalar<Rational>(const std::string& tok) {
  return parse_rational(tok);
}
template <>
QuadExt parse_scalar<QuadExt>(const std::string& tok) {
  return parse_quadext(tok);
}

std::string format(const Rational& x) { return to_string(x); }
std::string format(const QuadExt& x) { return to_compact_string(x); }

template <class T>
std::string join(const Vector<T>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ' ';
    s += format(v[k]);
  }
  return s;
}

template <class T>
Vector<T> parse_vector(const std::string& text, std::size_t expected, const std::string& what) {
  auto toks = tokens(text);
  if (toks.size() != expected)
    throw ParseError(what + ": expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(toks.size()));
  Vector<T> v;
  for (const auto& t : toks) v.push_back(parse_scalar<T>(t));
  return v;
}

template <class T>
void emit_rows(std::ostringstream& out, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) out << join(m.row(i)) << '\n';
}

// Cursor over the lines of a document.
class Lines {
 public:
  explicit Lines(const std::string& text) : lines_(split_lines(text)) {}

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_number() const { return pos_ + 1; }
  const std::string& next() {
    if (done()) throw ParseError("unexpected end of input");
    return lines_[pos_++];
  }
  void skip_trailing_blank() {
    while (!done() && blank(lines_[pos_])) ++pos_;
  }

  template <class T>
  Matrix<T> matrix(std::size_t m, std::size_t n, const std::string& what) {
    std::vector<T> data;
    data.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t at = line_number();
      auto row = parse_vector<T>(next(), n, what + " row " + std::to_string(i + 1) + " (line " +
                                                std::to_string(at) + ")");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix<T>(m, n, std::move(data));
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

std::pair<std::string, std::string> key_value(const std::string& line) {
  auto colon = line.find(':');
  if (colon == std::string::npos) throw ParseError("expected 'key: value', got '" + line + "'");
  std::string key = line.substr(0, colon);
  std::string value = line.substr(colon + 1);
  auto first = value.find_first_not_of(" \t");
  value = first == std::string::npos ? "" : value.substr(first);
  while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();
  return {key, value};
}

std::pair<std::size_t, std::size_t> parse_shape(const std::string& value, const std::string& what) {
  auto t = tokens(value);
  if (t.size() != 2) throw ParseError(what + ": expected '<rows> <cols>'");
  return {parse_count(t[0], "row count"), parse_count(t[1], "column count")};
}

}  // namespace

BimatrixGame parse_game(const std::string& text) {
  Lines lines(text);
  auto header = tokens(lines.next());
  if (header.size() != 2) throw ParseError("game header must be 'm n'");
  std::size_t m = parse_count(header[0], "row count");
  std::size_t n = parse_count(header[1], "column count");
  auto a = lines.matrix<Rational>(m, n, "A");
  if (!blank(lines.next())) throw ParseError("expected a blank line between A and B");
  auto b = lines.matrix<Rational>(m, n, "B");
  lines.skip_trailing_blank();
  if (!lines.done()) throw ParseError("unexpected content after B at line " + std::to_string(lines.line_number()));
  return {std::move(a), std::move(b)};
}

std::string emit_game(const BimatrixGame& g) {
  std::ostringstream out;
  out << g.m() << ' ' << g.n() << '\n';
  emit_rows(out, g.A);
  out << '\n';
  emit_rows(out, g.B);
  return out.str();
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::equivalent:
      return "equivalent";
    case CertificateStatus::not_equivalent:
      return "not-equivalent";
    case CertificateStatus::degenerate_zero_sum:
      return "degenerate-zero-sum";
    case CertificateStatus::rejected:
      return "rejected";
  }
  return "?";
}

namespace {

CertificateStatus parse_status(const std::string& s) {
  for (auto st : {CertificateStatus::equivalent, CertificateStatus::not_equivalent,
                  CertificateStatus::degenerate_zero_sum, CertificateStatus::rejected})
    if (to_string(st) == s) return st;
  throw ParseError("unknown status '" + s + "'");
}

}  // namespace

CertificateDocument make_document(const ReductionOutcome& outcome) {
  CertificateDocument doc;
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Equivalent>) {
          doc.status = CertificateStatus::equivalent;
          doc.gamma = r.certificate.gamma_star;
          doc.certificate = r.certificate;
        } else if constexpr (std::is_same_v<R, NotEquivalent>) {
          doc.status = CertificateStatus::not_equivalent;
          doc.reason = to_string(r.reason);
        } else if constexpr (std::is_same_v<R, DegenerateZeroSumLike>) {
          doc.status = CertificateStatus::degenerate_zero_sum;
          doc.gamma = r.gamma;
        } else {
          doc.status = CertificateStatus::rejected;
          doc.reason = r.reason;
        }
      },
      outcome.result);
  return doc;
}

std::string emit_certificate(const CertificateDocument& doc) {
  std::ostringstream out;
  out << "status: " << to_string(doc.status) << '\n';
  if (!doc.reason.empty()) out << "reason: " << doc.reason << '\n';
  if (doc.gamma) out << "gamma: " << to_string(*doc.gamma) << '\n';
  if (const auto& c = doc.certificate) {
    out << "case: " << to_string(c->case_tag) << '\n';
    if (c->pivot_row) out << "pivot_row: " << *c->pivot_row + 1 << '\n';
    if (c->pivot_col) out << "pivot_col: " << *c->pivot_col + 1 << '\n';
    out << "u_hat: " << join(c->u_hat) << '\n';
    out << "v_hat: " << join(c->v_hat) << '\n';
    out << "r_hat: " << join(c->r_hat) << '\n';
    out << "c_hat: " << join(c->c_hat) << '\n';
    out << "A_hat: " << c->A_hat.rows() << ' ' << c->A_hat.cols() << '\n';
    emit_rows(out, c->A_hat);
    out << "B_hat: " << c->B_hat.rows() << ' ' << c->B_hat.cols() << '\n';
    emit_rows(out, c->B_hat);
  }
  return out.str();
}

CertificateDocument parse_certificate(const std::string& text) {
  Lines lines(text);
  CertificateDocument doc;
  std::map<std::string, std::string> scalars;
  std::optional<Matrix<QuadExt>> a_hat, b_hat;
  bool have_status = false;
  lines.skip_trailing_blank();
  while (!lines.done()) {
    auto [key, value] = key_value(lines.next());
    if (key == "status") {
      doc.status = parse_status(value);
      have_status = true;
    } else if (key == "A_hat" || key == "B_hat") {
      auto [m, n] = parse_shape(value, key);
      auto mat = lines.matrix<QuadExt>(m, n, key);
      (key == "A_hat" ? a_hat : b_hat) = std::move(mat);
    } else if (key == "reason" || key == "gamma" || key == "case" || key == "pivot_row" || key == "pivot_col" ||
               key == "u_hat" || key == "v_hat" || key == "r_hat" || key == "c_hat") {
      if (!scalars.emplace(key, value).second) throw ParseError("duplicate key '" + key + "'");
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
    lines.skip_trailing_blank();
  }
  if (!have_status) throw ParseError("certificate has no status line");
  if (auto it = scalars.find("reason"); it != scalars.end()) doc.reason = it->second;
  if (auto it = scalars.find("gamma"); it != scalars.end()) doc.gamma = parse_quadext(it->second);

  if (doc.status != CertificateStatus::equivalent) return doc;
  if (!doc.gamma || !a_hat || !b_hat || !scalars.count("case"))
    throw ParseError("equivalent certificate is missing gamma, case, A_hat or B_hat");
  ReductionCertificate c;
  c.gamma_star = *doc.gamma;
  c.case_tag = parse_case_tag(scalars.at("case"));
  if (auto it = scalars.find("pivot_row"); it != scalars.end()) c.pivot_row = parse_count(it->second, "pivot_row") - 1;
  if (auto it = scalars.find("pivot_col"); it != scalars.end()) c.pivot_col = parse_count(it->second, "pivot_col") - 1;
  const std::size_t m = a_hat->rows(), n = a_hat->cols();
  auto vec = [&](const char* key, std::size_t len) {
    auto it = scalars.find(key);
    if (it == scalars.end()) throw ParseError(std::string("missing ") + key);
    return parse_vector<QuadExt>(it->second, len, key);
  };
  c.u_hat = vec("u_hat", n);
  c.v_hat = vec("v_hat", m);
  c.r_hat = vec("r_hat", m);
  c.c_hat = vec("c_hat", n);
  c.A_hat = std::move(*a_hat);
  c.B_hat = std::move(*b_hat);
  doc.certificate = std::move(c);
  return doc;
}

std::string emit_hidden(const HiddenParams& h) {
  std::ostringstream out;
  out << "alpha1: " << to_string(h.pat.alpha1) << '\n';
  out << "alpha2: " << to_string(h.pat.alpha2) << '\n';
  out << "beta1: " << to_string(h.pat.beta1) << '\n';
  out << "beta2: " << to_string(h.pat.beta2) << '\n';
  out << "u: " << join(h.pat.u) << '\n';
  out << "v: " << join(h.pat.v) << '\n';
  out << "r: " << join(h.base.r) << '\n';
  out << "c: " << join(h.base.c) << '\n';
  out << "A: " << h.base.A.rows() << ' ' << h.base.A.cols() << '\n';
  emit_rows(out, h.base.A);
  return out.str();
}

HiddenParams parse_hidden(const std::string& text) {
  Lines lines(text);
  std::map<std::string, std::string> kv;
  std::optional<Matrix<Rational>> a;
  lines.skip_trailing_blank();
  while (!lines.done()) {
    auto [key, value] = key_value(lines.next());
    if (key == "A") {
      auto [m, n] = parse_shape(value, key);
      a = lines.matrix<Rational>(m, n, "A");
    } else if (!kv.emplace(key, value).second) {
      throw ParseError("duplicate key '" + key + "'");
    }
    lines.skip_trailing_blank();
  }
  if (!a) throw ParseError("hidden parameters lack the base matrix A");
  auto get = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(std::string("missing ") + key);
    return it->second;
  };
  const std::size_t m = a->rows(), n = a->cols();
  HiddenParams h;
  h.pat.alpha1 = parse_rational(get("alpha1"));
  h.pat.alpha2 = parse_rational(get("alpha2"));
  h.pat.beta1 = parse_rational(get("beta1"));
  h.pat.beta2 = parse_rational(get("beta2"));
  h.pat.u = parse_vector<Rational>(get("u"), n, "u");
  h.pat.v = parse_vector<Rational>(get("v"), m, "v");
  h.base.r = parse_vector<Rational>(get("r"), m, "r");
  h.base.c = parse_vector<Rational>(get("c"), n, "c");
  h.base.A = std::move(*a);
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace strateq
