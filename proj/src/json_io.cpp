#include "clans/json_io.hpp"

namespace clans {

using nlohmann::json;

json certificate_to_json(const Certificate& cert) {
  json node;
  switch (cert.kind) {
    case Certificate::Kind::ClosedLeaf:
      node["kind"] = "closed_leaf";
      break;
    case Certificate::Kind::SignDelete:
      node["kind"] = "sign_delete";
      break;
    case Certificate::Kind::BlockSplit:
      node["kind"] = "block_split";
      break;
    case Certificate::Kind::OuterStrip:
      node["kind"] = "outer_strip";
      break;
  }
  node["begin"] = cert.begin + 1;
  node["length"] = cert.end - cert.begin;
  switch (cert.kind) {
    case Certificate::Kind::ClosedLeaf:
      break;
    case Certificate::Kind::SignDelete:
      node["sign_position"] = cert.sign_position + 1;
      node["left"] = certificate_to_json(cert.children.at(0));
      node["right"] = certificate_to_json(cert.children.at(1));
      break;
    case Certificate::Kind::BlockSplit: {
      json blocks = json::array();
      for (const Certificate& child : cert.children) blocks.push_back(certificate_to_json(child));
      node["blocks"] = std::move(blocks);
      break;
    }
    case Certificate::Kind::OuterStrip:
      node["interior"] = certificate_to_json(cert.children.at(0));
      break;
  }
  return node;
}

json verdict_to_json(const Clan& clan, const SmoothnessVerdict& verdict) {
  json doc;
  doc["clan"] = format_clan(clan);
  doc["p"] = clan.p();
  doc["q"] = clan.q();
  doc["dimension"] = dimension(clan);
  doc["closed"] = is_closed(clan);
  doc["rationally_smooth"] = is_smooth(verdict);
  if (const auto* bad = std::get_if<NotRationallySmooth>(&verdict)) {
    doc["witness_pattern"] = format_clan(theorem_patterns()[bad->pattern_index]);
    json positions = json::array();
    for (std::size_t pos : bad->embedding) positions.push_back(pos + 1);
    doc["witness_positions"] = std::move(positions);
  } else {
    doc["certificate"] = certificate_to_json(std::get<Smooth>(verdict).certificate);
  }
  return doc;
}

json witness_to_json(const ReflectionWitness& witness) {
  json hits = json::array();
  for (const auto& [i, j] : witness.hits) hits.push_back({i + 1, j + 1});
  return {{"closed", format_clan(witness.closed)},
          {"gamma", format_clan(witness.gamma)},
          {"budget", witness.budget},
          {"count", witness.count},
          {"hits", std::move(hits)}};
}

}  // namespace clans
