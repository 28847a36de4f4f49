#include "cyclequiv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclequiv {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (!field_->contains(c)) throw std::invalid_argument("poly: coefficient outside " + field_->name());
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, field->zero());
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::x_n_minus_one(FieldPtr field, std::size_t n) {
  std::vector<Elem> v(n + 1, field->zero());
  v[n] = field->one();
  v[0] = field->add(v[0], field->neg(field->one()));
  return Poly(std::move(field), std::move(v));
}

Elem Poly::eval(Elem x) const {
  Elem acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Elem> v(k, field_->zero());
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(v));
}

void require_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("poly: operands over different fields (" + a.field()->name() + " vs " +
                                b.field()->name() + ")");
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& F = *a.field_;
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& F = *a.field_;
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const auto& F = *a.field_;
  std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].v == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = F.add(v[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Poly(a.field_, std::move(v));
}

DivMod divmod(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw std::domain_error("poly: division by the zero polynomial");
  const auto& F = *f.field();
  std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  if (r.size() <= dg) return {Poly(f.field()), f};
  std::vector<Elem> q(r.size() - dg, F.zero());
  const Elem lead_inv = F.inv(g.lead());
  for (std::size_t top = r.size(); top-- > dg;) {
    if (r[top].v == 0) continue;
    const Elem c = F.mul(r[top], lead_inv);
    const std::size_t shift = top - dg;
    q[shift] = c;
    for (std::size_t i = 0; i <= dg; ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, g.coeff(i)));
  }
  r.resize(dg);
  return {Poly(f.field(), std::move(q)), Poly(f.field(), std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool divides(const Poly& g, const Poly& f) { return divmod(f, g).remainder.is_zero(); }

Poly pow(const Poly& f, unsigned e) {
  Poly acc = Poly::constant(f.field(), f.field()->one());
  Poly base = f;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Poly reduce_cyclic(const Poly& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("poly: cyclic length must be positive");
  const auto& F = *f.field();
  std::vector<Elem> v(std::min<std::size_t>(n, f.coeffs().size()), F.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i % n] = F.add(v[i % n], f.coeffs()[i]);
  return Poly(f.field(), std::move(v));
}

Poly mulmod(const Poly& f, const Poly& g, std::size_t n) {
  require_same_field(f, g);
  if (n == 0) throw std::invalid_argument("poly: cyclic length must be positive");
  const auto& F = *f.field();
  std::vector<Elem> v(n, F.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].v == 0) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      const std::size_t k = (i + j) % n;
      v[k] = F.add(v[k], F.mul(f.coeffs()[i], g.coeffs()[j]));
    }
  }
  return Poly(f.field(), std::move(v));
}

Poly substitute_power(const Poly& f, std::size_t e, std::size_t n) {
  if (n == 0 || e == 0 || e >= n) throw std::invalid_argument("substitute_power: need 0 < e < n");
  const auto& F = *f.field();
  std::vector<Elem> v(n, F.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const std::size_t k = static_cast<std::size_t>((static_cast<unsigned __int128>(i) * e) % n);
    v[k] = F.add(v[k], f.coeffs()[i]);
  }
  return Poly(f.field(), std::move(v));
}

Poly substitute_scale(const Poly& f, Elem delta, std::size_t n) {
  const auto& F = *f.field();
  if (!F.contains(delta)) throw std::invalid_argument("substitute_scale: delta outside " + F.name());
  if (delta.v == 0) throw std::domain_error("substitute_scale: delta must be nonzero");
  std::vector<Elem> v(f.coeffs().size());
  Elem power = F.one();
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = F.mul(f.coeffs()[i], power);
    power = F.mul(power, delta);
  }
  return reduce_cyclic(Poly(f.field(), std::move(v)), n);
}

Elem RootOfUnity::to_base(Elem a) const {
  auto it = std::lower_bound(subfield.begin(), subfield.end(), a.v,
                             [](const auto& entry, std::uint32_t v) { return entry.first < v; });
  if (it == subfield.end() || it->first != a.v)
    throw std::logic_error("root of unity: element " + std::to_string(a.v) + " of " + extension->name() +
                           " is not in the subfield " + base->name());
  return it->second;
}

Poly RootOfUnity::to_extension(const Poly& f) const {
  return map_coeffs(f, extension, [&](Elem c) { return to_extension(c); });
}

Poly RootOfUnity::to_base(const Poly& f) const {
  return map_coeffs(f, base, [&](Elem c) { return to_base(c); });
}

RootOfUnity primitive_root_of_unity(const FieldPtr& field, std::size_t n, std::uint64_t bound) {
  if (n == 0) throw std::invalid_argument("root of unity: n must be positive");
  if (n % field->characteristic() == 0)
    throw std::invalid_argument("root of unity: gcd(" + std::to_string(n) + ", " +
                                std::to_string(field->characteristic()) + ") != 1");
  RootOfUnity r;
  r.base = field;
  r.n = n;
  r.t = static_cast<unsigned>(multiplicative_order(field->size() % n, n));
  r.extension = Field::make(field->characteristic(), field->degree() * r.t, bound);
  const auto& E = *r.extension;
  r.alpha = E.exp(static_cast<std::int64_t>((E.size() - 1) / n));

  // Embed the base field by sending the class of x to a root of the base
  // modulus inside the unique subfield of order q.
  const auto& B = *field;
  r.embed.assign(B.size(), E.zero());
  if (B.is_prime()) {
    for (std::uint32_t c = 0; c < B.size(); ++c) r.embed[c] = E.from_int(c);
  } else {
    const std::int64_t step = (E.size() - 1) / (B.size() - 1);
    Elem root = E.zero();
    bool found = false;
    for (std::uint32_t j = 0; j + 1 < B.size() && !found; ++j) {
      const Elem cand = E.exp(step * j);
      Elem acc = E.zero();
      const auto& mod = B.modulus();
      for (std::size_t i = mod.size(); i-- > 0;) acc = E.add(E.mul(acc, cand), E.from_int(mod[i]));
      if (acc.v == 0) {
        root = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("root of unity: base modulus has no root in the extension");
    for (std::uint32_t v = 0; v < B.size(); ++v) {
      const auto coords = B.coordinates(Elem{v});
      Elem acc = E.zero();
      for (std::size_t i = coords.size(); i-- > 0;) acc = E.add(E.mul(acc, root), E.from_int(coords[i]));
      r.embed[v] = acc;
    }
  }
  for (std::uint32_t v = 0; v < B.size(); ++v) r.subfield.emplace_back(r.embed[v].v, Elem{v});
  std::sort(r.subfield.begin(), r.subfield.end());
  return r;
}

namespace {

std::string element_token(const Field& F, Elem c) {
  if (F.is_prime()) return std::to_string(c.v);
  if (c.v == 0) return "0";
  const auto l = F.log(c);
  if (l == 0) return "1";
  if (l == 1) return "a";
  return "a^" + std::to_string(l);
}

}  // namespace

std::string format_poly(const Poly& f) {
  const auto& F = *f.field();
  std::string out = "[";
  if (f.is_zero()) return "[0]";
  const bool digits = F.is_prime() && F.size() <= 10;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += element_token(F, f.coeffs()[i]);
  }
  out += ']';
  return out;
}

std::string format_poly_algebraic(const Poly& f) {
  const auto& F = *f.field();
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Elem c = f.coeffs()[i];
    if (c.v == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == F.one();
    if (!unit || i == 0) os << element_token(F, c);
    if (i > 0) {
      if (!unit) os << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  const auto& F = *field;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("polynomial: expected '['", pos);
  ++pos;
  const std::size_t close = text.find(']', pos);
  if (close == std::string_view::npos) throw ParseError("polynomial: missing ']'", text.size());
  const std::string_view body = text.substr(pos, close - pos);
  for (std::size_t k = close + 1; k < text.size(); ++k)
    if (!std::isspace(static_cast<unsigned char>(text[k]))) throw ParseError("polynomial: trailing characters", k);

  std::vector<Elem> coeffs;
  const bool has_comma = body.find(',') != std::string_view::npos;
  const bool digit_string = F.is_prime() && F.size() <= 10 && !has_comma &&
                            body.find('a') == std::string_view::npos;
  if (digit_string) {
    for (std::size_t k = 0; k < body.size(); ++k) {
      const char ch = body[k];
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (!std::isdigit(static_cast<unsigned char>(ch)) || static_cast<unsigned>(ch - '0') >= F.size())
        throw ParseError(std::string("polynomial: invalid coefficient '") + ch + "' for " + F.name(), pos + k);
      coeffs.push_back(Elem{static_cast<std::uint32_t>(ch - '0')});
    }
  } else if (!has_comma) {
    // Compact extension-field form such as "1aa^2a^20": single-digit integers,
    // and exponents that take digits only while they stay below q - 1.
    std::size_t k = 0;
    while (k < body.size()) {
      const char ch = body[k];
      const std::size_t at = pos + k;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++k;
      } else if (ch == 'a') {
        ++k;
        std::int64_t e = 1;
        if (k < body.size() && body[k] == '^') {
          ++k;
          if (k >= body.size() || !std::isdigit(static_cast<unsigned char>(body[k])))
            throw ParseError("polynomial: expected exponent after '^'", pos + k);
          e = 0;
          while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) {
            const std::int64_t next = e * 10 + (body[k] - '0');
            if (next >= static_cast<std::int64_t>(F.size() - 1) && k > 0 && body[k - 1] != '^') break;
            e = next;
            ++k;
          }
        }
        coeffs.push_back(F.exp(e));
      } else if (std::isdigit(static_cast<unsigned char>(ch)) &&
                 static_cast<unsigned>(ch - '0') < F.characteristic()) {
        coeffs.push_back(F.from_int(ch - '0'));
        ++k;
      } else {
        throw ParseError(std::string("polynomial: invalid coefficient '") + ch + "' for " + F.name(), at);
      }
    }
  } else {
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find(',', start);
      if (end == std::string_view::npos) end = body.size();
      std::string_view tok = body.substr(start, end - start);
      std::size_t lead = 0;
      while (lead < tok.size() && std::isspace(static_cast<unsigned char>(tok[lead]))) ++lead;
      tok.remove_prefix(lead);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
      const std::size_t at = pos + start + lead;
      if (tok.empty()) throw ParseError("polynomial: empty coefficient", at);
      if (tok[0] == 'a') {
        std::int64_t e = 1;
        if (tok.size() > 1) {
          if (tok.size() < 3 || tok[1] != '^') throw ParseError("polynomial: bad token '" + std::string(tok) + "'", at);
          e = 0;
          for (std::size_t k = 2; k < tok.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(tok[k])))
              throw ParseError("polynomial: bad exponent in '" + std::string(tok) + "'", at + k);
            e = e * 10 + (tok[k] - '0');
            if (e > (std::int64_t{1} << 40)) throw ParseError("polynomial: exponent too large", at);
          }
        }
        coeffs.push_back(F.exp(e));
      } else {
        std::int64_t v = 0;
        for (std::size_t k = 0; k < tok.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(tok[k])))
            throw ParseError("polynomial: bad token '" + std::string(tok) + "'", at + k);
          v = v * 10 + (tok[k] - '0');
          if (v >= static_cast<std::int64_t>(F.characteristic()))
            throw ParseError("polynomial: integer token '" + std::string(tok) + "' outside the prime subfield", at);
        }
        coeffs.push_back(F.from_int(v));
      }
      start = end + 1;
    }
  }
  if (coeffs.empty()) throw ParseError("polynomial: no coefficients", pos);
  return Poly(field, std::move(coeffs));
}

}  // namespace cyclequiv
