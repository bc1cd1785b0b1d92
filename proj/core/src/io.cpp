#include "bruhat/io.hpp"

#include <limits>

#include "io_json.hpp"

namespace bruhat {

nlohmann::json polynomial_json(const QPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const mpz_class& c : p.coefficients()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

QPolynomial polynomial_from_json_value(const nlohmann::json& j) {
  if (!j.is_array()) throw BruhatError("polynomial JSON must be an array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else if (c.is_string()) {
      mpz_class value;
      if (value.set_str(c.get<std::string>(), 10) != 0) {
        throw BruhatError("polynomial coefficient '" + c.get<std::string>() + "' is not an integer");
      }
      coeffs.push_back(std::move(value));
    } else {
      throw BruhatError("polynomial coefficient must be an integer");
    }
  }
  return QPolynomial(std::move(coeffs));
}

nlohmann::json reflection_json(Reflection t) { return nlohmann::json::array({t.i, t.j}); }

std::string interval_to_json(const BruhatInterval& iv, int indent) {
  nlohmann::json j;
  j["n"] = iv.degree();
  j["u"] = iv.bottom().to_string();
  j["v"] = iv.top().to_string();
  auto elements = nlohmann::json::array();
  auto ranks = nlohmann::json::array();
  for (int x = 0; x < iv.size(); ++x) {
    elements.push_back(iv.element(x).to_string());
    ranks.push_back(iv.rank(x));
  }
  j["elements"] = std::move(elements);
  j["rank"] = std::move(ranks);
  auto hasse = nlohmann::json::array();
  for (const Edge& e : iv.hasse_edges()) hasse.push_back({e.source, e.target});
  auto bruhat = nlohmann::json::array();
  for (const Edge& e : iv.bruhat_edges()) bruhat.push_back({e.source, e.target, reflection_json(e.label)});
  j["hasse"] = std::move(hasse);
  j["bruhat"] = std::move(bruhat);
  return j.dump(indent);
}

std::string order_to_json(const ReflectionOrder& order) {
  auto arr = nlohmann::json::array();
  for (const Reflection t : order.ordered()) arr.push_back(reflection_json(t));
  return arr.dump();
}

ReflectionOrder order_from_json(std::string_view text) {
  const auto j = parse_json(text);
  if (!j.is_array()) throw BruhatError("reflection order JSON must be an array");
  std::vector<Reflection> seq;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw BruhatError("reflection must be [i,j]");
    seq.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return ReflectionOrder(std::move(seq));
}

std::string polynomial_to_json(const QPolynomial& p) { return polynomial_json(p).dump(); }

QPolynomial polynomial_from_json(std::string_view text) {
  return polynomial_from_json_value(parse_json(text));
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BruhatError(std::string("malformed JSON: ") + e.what());
  }
}

nlohmann::json decomposition_json(const BruhatInterval& iv, const HypercubeDecomposition& hcd) {
  nlohmann::json j;
  j["z"] = iv.element(hcd.z).to_string();
  auto ideal = nlohmann::json::array();
  for (int x : hcd.ideal.members()) ideal.push_back(iv.element(x).to_string());
  j["ideal"] = std::move(ideal);
  auto clusters = nlohmann::json::array();
  for (const auto& c : hcd.clusters) {
    nlohmann::json cj;
    cj["x"] = iv.element(c.base()).to_string();
    auto frontier = nlohmann::json::array();
    for (int y : c.frontier()) frontier.push_back(iv.element(y).to_string());
    cj["frontier"] = std::move(frontier);
    auto images = nlohmann::json::array();
    for (const auto& [mask, img] : c.images()) {
      auto ys = nlohmann::json::array();
      for (int y : c.antichain(mask)) ys.push_back(iv.element(y).to_string());
      images.push_back({std::move(ys), iv.element(img).to_string()});
    }
    cj["images"] = std::move(images);
    clusters.push_back(std::move(cj));
  }
  j["clusters"] = std::move(clusters);
  return j;
}

std::string decomposition_to_json(const BruhatInterval& iv, const HypercubeDecomposition& hcd,
                                  int indent) {
  return decomposition_json(iv, hcd).dump(indent);
}

}  // namespace bruhat
