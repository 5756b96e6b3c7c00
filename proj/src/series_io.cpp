#include <json.hpp>
#include <string>

#include "jumpdet/coefficients.hpp"
#include "jumpdet/errors.hpp"

namespace jumpdet {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("series JSON needs an array \"") + key + "\"", 1, 1);
  }
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw ParseError(std::string("non-numeric entry in \"") + key + "\"", 1, 1);
    out.push_back(v.get<double>());
  }
  return out;
}

// Line and column of a byte offset, both 1-based.
std::pair<std::size_t, std::size_t> position(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string to_json(const FourierSeries& s) {
  json j;
  j["kind"] = "fourier";
  j["K"] = s.K();
  j["a0_half"] = s.a0_half;
  j["a"] = s.a;
  j["b"] = s.b;
  j["provenance"] = provenance_name(s.provenance);
  return j.dump();
}

std::string to_json(const ChebyshevSeries& s) {
  json j;
  j["kind"] = "chebyshev";
  j["K"] = s.K();
  j["c"] = s.c;
  j["provenance"] = provenance_name(s.provenance);
  return j.dump();
}

SeriesFile series_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = position(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  if (!j.is_object()) throw ParseError("series JSON must be an object", 1, 1);
  std::string kind = "fourier";
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError("\"kind\" must be a string", 1, 1);
    kind = j["kind"].get<std::string>();
  } else if (j.contains("c")) {
    kind = "chebyshev";
  }
  SeriesFile out;
  try {
    if (kind == "fourier") {
      double a0_half = 0.0;
      if (j.contains("a0_half")) {
        if (!j["a0_half"].is_number()) throw ParseError("\"a0_half\" must be a number", 1, 1);
        a0_half = j["a0_half"].get<double>();
      }
      out.fourier = FourierSeries(a0_half, number_array(j, "a"), number_array(j, "b"));
      if (j.contains("K") && (!j["K"].is_number_integer() || j["K"].get<std::size_t>() != out.fourier.K())) {
        throw ParseError("\"K\" does not match the coefficient arrays", 1, 1);
      }
    } else if (kind == "chebyshev") {
      out.is_chebyshev = true;
      out.chebyshev = ChebyshevSeries(number_array(j, "c"));
      if (j.contains("K") && (!j["K"].is_number_integer() || j["K"].get<std::size_t>() != out.chebyshev.K())) {
        throw ParseError("\"K\" does not match the coefficient array", 1, 1);
      }
    } else {
      throw ParseError("unknown series kind \"" + kind + "\"", 1, 1);
    }
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return out;
}

}  // namespace jumpdet
