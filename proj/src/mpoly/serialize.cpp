#include "jackclust/mpoly/serialize.hpp"

#include <sstream>

#include "jackclust/errors.hpp"

namespace jackclust {

ParamMask field_of(const Poly& f) {
  ParamMask m = 0;
  for (const auto& t : f.terms()) m = combine_fields(m, t.second.field());
  return m;
}

std::string serialize(const Poly& f) {
  const ParamMask field = field_of(f);
  std::ostringstream out;
  out << "mpoly nvars=" << f.nvars() << " field=" << mask_to_string(field) << "\n";
  for (const auto& t : f.terms()) out << t.first.to_string(f.nvars()) << ' ' << t.second.with_field(field).serialize() << "\n";
  out << "end " << f.size() << "\n";
  return out.str();
}

Poly deserialize_poly(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty polynomial text");
  int nvars = -1;
  std::string field_text;
  {
    std::istringstream hs(line);
    std::string tag, nv, fd;
    hs >> tag >> nv >> fd;
    if (tag != "mpoly" || nv.rfind("nvars=", 0) != 0 || fd.rfind("field=", 0) != 0)
      throw ParseError("bad polynomial header: " + line);
    try {
      nvars = std::stoi(nv.substr(6));
    } catch (const std::exception&) {
      throw ParseError("bad nvars in header: " + line);
    }
    field_text = fd.substr(6);
  }
  if (nvars < 0 || nvars > kMaxVars) throw ParseError("nvars out of range");
  const ParamMask field = mask_from_string(field_text);
  std::vector<Poly::Term> terms;
  bool ended = false;
  while (std::getline(in, line)) {
    if (line.rfind("end ", 0) == 0) {
      std::size_t count = 0;
      try {
        count = std::stoul(line.substr(4));
      } catch (const std::exception&) {
        throw ParseError("bad end line: " + line);
      }
      if (count != terms.size()) throw ParseError("term count mismatch (truncated?)");
      ended = true;
      break;
    }
    auto close = line.find(']');
    if (line.empty() || line[0] != '[' || close == std::string::npos || close + 2 > line.size())
      throw ParseError("bad term line: " + line);
    std::vector<int> exps;
    std::string inner = line.substr(1, close - 1);
    std::stringstream es(inner);
    std::string e;
    while (std::getline(es, e, ',')) {
      if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad exponent: " + line);
      exps.push_back(std::stoi(e));
    }
    if (static_cast<int>(exps.size()) != nvars) throw ParseError("exponent vector length mismatch: " + line);
    FieldElement c = FieldElement::deserialize(line.substr(close + 2), field);
    if (c.is_zero()) throw ParseError("zero coefficient stored: " + line);
    terms.emplace_back(Monomial::from_exponents(exps), c);
  }
  if (!ended) throw ParseError("missing end line (truncated?)");
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!grlex_greater(terms[i - 1].first, terms[i].first)) throw ParseError("terms not in canonical order");
  return Poly::from_sorted_terms(nvars, std::move(terms));
}

std::string pretty(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    std::string mono;
    for (int i = 0; i < f.nvars(); ++i) {
      int e = t.first[i];
      if (!e) continue;
      if (!mono.empty()) mono += '*';
      mono += "z" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string coef = t.second.pretty();
    bool simple = t.second.den().is_one() && t.second.num().size() == 1;
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += simple ? coef : "(" + coef + ")";
    } else if (t.second.is_one()) {
      out += mono;
    } else {
      out += (simple ? coef : "(" + coef + ")") + "*" + mono;
    }
  }
  return out;
}

Poly to_field_poly(const RatPoly& f) {
  return f.map_coefficients([](const BigRational& c) { return FieldElement(c); });
}

Poly ring_to_field(const RingPoly& f, ParamMask field) {
  return f.map_coefficients([field](const ParamPoly& c) { return FieldElement::from_poly(c, field); });
}

Poly specialize_poly(const Poly& f, const Bindings& bindings) {
  return f.map_coefficients([&](const FieldElement& c) { return c.specialize(bindings); });
}

}  // namespace jackclust
