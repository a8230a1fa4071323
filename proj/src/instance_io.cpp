#include "semreg/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semreg {

namespace {

std::runtime_error parse_error(const std::string& what) {
  return std::runtime_error("instance parse error: " + what);
}

}  // namespace

InstanceFile parse_instance_text(const std::string& content) {
  InstanceFile out;
  std::istringstream in(content);
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (!header_seen) {
      long long d = 0;
      std::string alpha_text;
      if (!(fields >> d >> alpha_text)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw parse_error("expected header line \"d alpha\"");
      }
      out.d = static_cast<int>(d);
      out.alpha = Int(alpha_text);
      std::string extra_token;
      if (fields >> extra_token) throw parse_error("trailing data on the header line");
      header_seen = true;
      continue;
    }
    std::vector<Int> coords;
    std::string token;
    while (fields >> token) coords.emplace_back(token);
    if (coords.empty()) continue;
    if (static_cast<int>(coords.size()) != out.d)
      throw parse_error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(out.d) + " coordinates");
    out.generators.emplace_back(std::move(coords));
  }
  if (!header_seen) throw parse_error("missing header line \"d alpha\"");
  return out;
}

InstanceFile parse_instance_json(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("alpha") || !j.contains("generators"))
    throw parse_error("expected an object with keys d, alpha, generators");
  InstanceFile out;
  out.d = j.at("d").get<int>();
  out.alpha = Int(j.at("alpha").get<long long>());
  for (const auto& gen : j.at("generators")) {
    std::vector<Int> coords;
    for (const auto& c : gen) coords.emplace_back(c.get<long long>());
    out.generators.emplace_back(std::move(coords));
  }
  return out;
}

InstanceFile load_instance(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return json ? parse_instance_json(buffer.str()) : parse_instance_text(buffer.str());
}

std::string to_text(const InstanceFile& instance) {
  std::ostringstream out;
  out << instance.d << ' ' << instance.alpha << '\n';
  for (const auto& g : instance.generators) {
    for (int i = 0; i < g.dim(); ++i) {
      if (i) out << ' ';
      out << g[i];
    }
    out << '\n';
  }
  return out.str();
}

SemigroupPresentation to_presentation(const InstanceFile& instance) {
  return SemigroupPresentation(instance.d, instance.alpha, instance.generators);
}

}  // namespace semreg
