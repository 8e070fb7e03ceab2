#include <charconv>
#include <optional>

#include "trigint/sequences.hpp"

namespace trigint {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void fail(std::string_view what, std::string_view token, std::string_view spec) {
  throw ParseError(std::string(what) + " '" + std::string(token) + "' in spec '" + std::string(spec) + "'");
}

double parse_real(std::string_view token, std::string_view spec) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) fail("invalid number", token, spec);
  return value;
}

std::vector<double> parse_list(std::string_view body, std::string_view spec) {
  std::vector<double> values;
  if (body.empty()) return values;
  for (auto tok : split(body, ',')) values.push_back(parse_real(tok, spec));
  return values;
}

// Wraps factory validation failures so callers see a single error type.
template <class F>
auto checked(F&& make, std::string_view token, std::string_view spec) {
  try {
    return make();
  } catch (const std::domain_error& e) {
    fail(std::string("invalid parameters (") + e.what() + ")", token, spec);
  }
}

}  // namespace

PsiSequence parse_psi(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (head == "factorial") {
    if (colon != std::string_view::npos) fail("unexpected parameters", spec.substr(colon), spec);
    return PsiSequence::factorial();
  }
  if (colon == std::string_view::npos) fail("unknown psi kind", head, spec);

  if (head == "table") {
    auto values = parse_list(body, spec);
    return checked([&] { return PsiSequence::table(std::move(values)); }, body, spec);
  }

  if (head != "exp" && head != "pow") fail("unknown psi kind", head, spec);

  std::optional<double> alpha, r;
  for (auto tok : split(body, ',')) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos) fail("expected key=value", tok, spec);
    const std::string_view key = tok.substr(0, eq);
    const double value = parse_real(tok.substr(eq + 1), spec);
    std::optional<double>* slot = nullptr;
    if (key == "r")
      slot = &r;
    else if (key == "alpha" && head == "exp")
      slot = &alpha;
    else
      fail("unknown key", key, spec);
    if (slot->has_value()) fail("duplicate key", key, spec);
    *slot = value;
  }

  if (head == "exp") {
    if (!alpha) fail("missing key", "alpha", spec);
    if (!r) fail("missing key", "r", spec);
    return checked([&] { return PsiSequence::gaussian_exponential(*alpha, *r); }, body, spec);
  }
  if (!r) fail("missing key", "r", spec);
  return checked([&] { return PsiSequence::power(*r); }, body, spec);
}

BetaSequence parse_beta(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) fail("unknown beta kind", spec, spec);
  const std::string_view head = spec.substr(0, colon);
  std::string_view body = spec.substr(colon + 1);

  if (head == "const") return checked([&] { return BetaSequence::constant(parse_real(body, spec)); }, body, spec);
  if (head != "table") fail("unknown beta kind", head, spec);

  Extension ext = Extension::periodic;
  if (const std::size_t semi = body.find(';'); semi != std::string_view::npos) {
    const std::string_view rule = body.substr(semi + 1);
    if (rule == "periodic")
      ext = Extension::periodic;
    else if (rule == "hold")
      ext = Extension::hold;
    else
      fail("unknown extension rule", rule, spec);
    body = body.substr(0, semi);
  }
  auto values = parse_list(body, spec);
  return checked([&] { return BetaSequence::table(std::move(values), ext); }, body, spec);
}

}  // namespace trigint
