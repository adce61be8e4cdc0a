#include "exsplash/text_io.hpp"

#include <ostream>

#include "exsplash/errors.hpp"

namespace exsplash {

std::string text_of(const FieldCtx& F, Fq a) {
  ensure(a.v < F.q(), "subfield label out of range");
  return std::string(1, static_cast<char>('0' + a.v));
}

std::string text_of(const FieldCtx& F, Fq3 a) {
  std::string s(3, '0');
  for (unsigned i = 0; i < 3; ++i) s[2 - i] = static_cast<char>('0' + F.coeff(a, i).v);
  return s;
}

std::string text_of(const FieldCtx& F, Pg1Point p) {
  return p.inf ? std::string("inf") : text_of(F, p.t);
}

std::string text_of(const FieldCtx& F, const ProjPoint& P) {
  return "(" + text_of(F, P.c[0]) + "," + text_of(F, P.c[1]) + "," + text_of(F, P.c[2]) + ")";
}

std::string text_of(const FieldCtx& F, const ProjLine& L) {
  return "[" + text_of(F, L.c[0]) + "," + text_of(F, L.c[1]) + "," + text_of(F, L.c[2]) + "]";
}

std::string text_of(const FieldCtx& F, const Mat3& m) {
  std::string s;
  for (int r = 0; r < 3; ++r) {
    if (r) s += ";";
    for (int c = 0; c < 3; ++c) {
      if (c) s += ",";
      s += text_of(F, m[3 * r + c]);
    }
  }
  return s;
}

namespace {
void check_field(const std::string& f) {
  for (char ch : f)
    ensure(ch != ',' && ch != '"' && ch != '\n' && ch != '\r', "csv field contains a delimiter");
}
} // namespace

std::string csv_row(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    check_field(fields[i]);
    if (i) s += ",";
    s += fields[i];
  }
  s += "\n";
  return s;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  os << csv_row(header);
  for (const auto& r : rows) {
    ensure(r.size() == header.size(), "csv row width differs from header");
    os << csv_row(r);
  }
}

} // namespace exsplash
