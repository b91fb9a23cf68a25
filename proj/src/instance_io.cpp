#include "advicepack/instance_io.hpp"

#include <fstream>
#include <json.hpp>

namespace advicepack {

using nlohmann::json;

RequestSequence read_instance_json(std::istream& in) {
  json doc = json::parse(in);
  if (!doc.contains("items") || !doc["items"].is_array())
    throw BadParams("instance json needs an \"items\" array");
  RequestSequence seq;
  for (const auto& item : doc["items"]) {
    if (!item.is_string()) throw BadParams("item sizes must be strings");
    Rat size = parse_rational_or_throw(item.get<std::string>());
    if (!is_item_size(size))
      throw BadParams("item size " + to_fraction_string(size) +
                      " outside (0,1]");
    seq.push_back(size);
  }
  if (doc.contains("n") && doc["n"].get<std::size_t>() != seq.size())
    throw BadParams("instance json: n does not match items length");
  return seq;
}

RequestSequence read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open instance file '" + path + "'");
  return read_instance_json(in);
}

void write_instance_json(const RequestSequence& seq, std::ostream& out) {
  json doc;
  doc["n"] = seq.size();
  json items = json::array();
  for (const Rat& s : seq) items.push_back(to_fraction_string(s));
  doc["items"] = std::move(items);
  out << doc.dump(2) << "\n";
}

void write_instance_file(const RequestSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BadParams("cannot open output file '" + path + "'");
  write_instance_json(seq, out);
}

Packing read_packing_json(const RequestSequence& seq, std::istream& in) {
  json doc = json::parse(in);
  if (!doc.contains("bins") || !doc["bins"].is_array())
    throw BadParams("packing json needs a \"bins\" array");
  // Built without capacity checks: verify_packing is the judge of validity,
  // so the CLI can load and diagnose broken witnesses.
  Packing packing;
  packing.assignment.assign(seq.size(), -1);
  for (const auto& bin : doc["bins"]) {
    Bin b;
    for (const auto& idx : bin) {
      std::size_t i = idx.get<std::size_t>();
      if (i >= seq.size())
        throw BadParams("packing references item #" + std::to_string(i) +
                        " outside the instance");
      b.items.push_back(i);
      b.load += seq[i];
      packing.assignment[i] = static_cast<int>(packing.bins.size());
    }
    packing.bins.push_back(std::move(b));
  }
  return packing;
}

Packing read_packing_file(const RequestSequence& seq, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open packing file '" + path + "'");
  return read_packing_json(seq, in);
}

void write_packing_json(const Packing& packing, std::ostream& out) {
  json doc;
  doc["cost"] = packing.cost();
  json bins = json::array();
  for (const Bin& b : packing.bins) {
    if (b.items.empty()) continue;
    bins.push_back(b.items);
  }
  doc["bins"] = std::move(bins);
  out << doc.dump(2) << "\n";
}

}  // namespace advicepack
