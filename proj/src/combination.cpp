#include "galreal/combination.hpp"

#include "galreal/errors.hpp"
#include "galreal/expr.hpp"

#include <cctype>

namespace galreal {

Vec parse_combination(std::string_view text, const std::vector<std::string> & labels)
{
  const RatExpr e = parse_ratexpr(text);
  for (const auto & l : labels) {
    if (e.den().depends_on(Symbol(l))) {
      throw InputError("linear combination must not divide by a label: " + std::string(text));
    }
  }
  Vec out(labels.size());
  RatExpr rest = e;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const Symbol s(labels[k]);
    out[k] = e.differentiate(s);
    for (const auto & l : labels) {
      if (out[k].depends_on(Symbol(l))) {
        throw InputError("not linear in the labels: " + std::string(text));
      }
    }
    rest -= out[k] * RatExpr::symbol(labels[k]);
  }
  if (!rest.is_zero()) {
    throw InputError("term without a label in '" + std::string(text) + "': " + to_text(rest));
  }
  return out;
}

namespace {

/// A LaTeX command such as \alpha needs a space before a label that starts with a letter.
std::string join(const std::string & coeff, const std::string & times, const std::string & label)
{
  if (times.empty() && !coeff.empty() && !label.empty() && std::isalpha(static_cast<unsigned char>(coeff.back())) &&
      std::isalpha(static_cast<unsigned char>(label.front()))) {
    return coeff + " " + label;
  }
  return coeff + times + label;
}

template <typename Render>
std::string render_impl(const Vec & coeffs, const std::vector<std::string> & labels, Render render, const std::string & times)
{
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const RatExpr & c = coeffs[k];
    if (c.is_zero()) {
      continue;
    }
    bool negative = false;
    std::string body;
    if (c.is_exppoly() && c.num().is_single_term()) {
      const auto & [key, value] = *c.num().terms().begin();
      negative = sgn(value) < 0;
      const RatExpr a = negative ? -c : c;
      if (a == RatExpr(1)) {
        body = labels[k];
      } else {
        body = join(render(a), times, labels[k]);
      }
    } else {
      body = join("(" + render(c) + ")", times, labels[k]);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_combination(const Vec & coeffs, const std::vector<std::string> & labels)
{
  return render_impl(coeffs, labels, [](const RatExpr & e) { return to_text(e); }, "*");
}

std::string render_combination_latex(const Vec & coeffs, const std::vector<std::string> & labels)
{
  return render_impl(coeffs, labels, [](const RatExpr & e) { return to_latex(e); }, "");
}

}  // namespace galreal
