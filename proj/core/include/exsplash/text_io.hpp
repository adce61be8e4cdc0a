#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "exsplash/pg1.hpp"
#include "exsplash/plane.hpp"

namespace exsplash {

// Plain-text atoms. Field elements of GF(q^3) print as three coefficient
// digits, highest power first ("a2a1a0", e.g. tau -> "010"); q <= 9 keeps
// every coefficient a single decimal digit. GF(q) elements are one digit.
std::string text_of(const FieldCtx& F, Fq a);
std::string text_of(const FieldCtx& F, Fq3 a);
std::string text_of(const FieldCtx& F, Pg1Point p); // "inf" for infinity
std::string text_of(const FieldCtx& F, const ProjPoint& P); // "(x,y,z)"
std::string text_of(const FieldCtx& F, const ProjLine& L);  // "[l,m,n]"
std::string text_of(const FieldCtx& F, const Mat3& m); // rows joined with ';'

// CSV with fixed headers. Fields are produced by the text atoms above and
// never contain commas, quotes, or newlines; writers enforce that.
std::string csv_row(const std::vector<std::string>& fields);
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

} // namespace exsplash
