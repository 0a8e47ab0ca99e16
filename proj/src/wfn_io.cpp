#include "ncplane/wfn_io.hpp"

#include <istream>
#include <ostream>

#include "ncplane/errors.hpp"

namespace ncplane {

namespace {
constexpr const char* kFormatTag = "wfn-json/1";
}

nlohmann::json wavefunction_to_json(const Wavefunction& psi) {
  const GridSpec& spec = psi.spec();
  const auto count = static_cast<std::size_t>(spec.n) * spec.n;
  std::vector<double> re, im;
  re.reserve(count);
  im.reserve(count);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      re.push_back(psi.values()(i, j).real());
      im.push_back(psi.values()(i, j).imag());
    }
  }
  return {{"format", kFormatTag}, {"n", spec.n},   {"l", spec.l}, {"theta", spec.theta},
          {"hbar", spec.hbar},    {"re", std::move(re)}, {"im", std::move(im)}};
}

Wavefunction wavefunction_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FormatError("wfn-json: document is not an object");
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key)) throw FormatError(std::string("wfn-json: missing field '") + key + "'");
    return doc.at(key);
  };
  if (!field("format").is_string() || field("format").get<std::string>() != kFormatTag)
    throw FormatError("wfn-json: format tag must be \"wfn-json/1\"");
  for (const char* key : {"l", "theta", "hbar"})
    if (!field(key).is_number()) throw FormatError(std::string("wfn-json: '") + key + "' must be a number");
  if (!field("n").is_number_integer()) throw FormatError("wfn-json: 'n' must be an integer");

  GridSpec spec;
  spec.n = field("n").get<int>();
  spec.l = field("l").get<double>();
  spec.theta = field("theta").get<double>();
  spec.hbar = field("hbar").get<double>();
  spec.validate();

  const auto count = static_cast<std::size_t>(spec.n) * spec.n;
  const auto& re = field("re");
  const auto& im = field("im");
  if (!re.is_array() || !im.is_array()) throw FormatError("wfn-json: 're' and 'im' must be arrays");
  if (re.size() != count || im.size() != count)
    throw FormatError("wfn-json: 're'/'im' must each hold n^2 = " + std::to_string(count) + " values");

  Eigen::ArrayXXcd values(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * spec.n + j;
      if (!re[k].is_number() || !im[k].is_number()) throw FormatError("wfn-json: amplitudes must be numbers");
      values(i, j) = Complex(re[k].get<double>(), im[k].get<double>());
    }
  }
  return Wavefunction(spec, std::move(values));
}

void write_wfn_json(std::ostream& out, const Wavefunction& psi) { out << wavefunction_to_json(psi).dump() << '\n'; }

Wavefunction read_wfn_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("wfn-json: ") + e.what());
  }
  return wavefunction_from_json(doc);
}

}  // namespace ncplane
