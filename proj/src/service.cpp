// Copyright 2026 The inkmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "inkmatch/service.hpp"

#include <charconv>

#include "httplib.h"
#include "inkmatch/ink_io.hpp"

namespace inkmatch {

using nlohmann::json;

namespace {

std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::kNone: return "none";
    case RejectReason::kScoreAboveThreshold: return "score_above_threshold";
    case RejectReason::kNoCompatibleGroup: return "no_compatible_group";
  }
  return "none";
}

HttpReply error_reply(int status, const std::string& error, const std::string& detail) {
  return {status, json{{"error", error}, {"detail", detail}}.dump()};
}

struct ParsedRequest {
  InkSymbol symbol;
  std::size_t topk = kDefaultTopK;
};

// Throws HttpReply-worthy messages as Error.
ParsedRequest parse_request(const std::string& body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  ParsedRequest req;
  req.symbol = symbol_from_json(j);
  if (j.contains("topk")) {
    if (!j["topk"].is_number_integer() || j["topk"].get<long long>() < 1)
      throw Error("\"topk\" must be a positive integer");
    req.topk = j["topk"].get<std::size_t>();
  }
  return req;
}

}  // namespace

json recognition_to_json(const RecognitionResult& result) {
  json ranked = json::array();
  for (const ClassScore& c : result.ranked) ranked.push_back({{"label", c.label}, {"score", c.score}, {"group", c.group}});
  json strokes = json::array();
  for (const StrokeMatch& m : result.per_stroke) {
    strokes.push_back({{"stroke", m.stroke},
                       {"region", region_name(m.region)},
                       {"matched_region", region_name(m.matched_region)},
                       {"template", m.template_id},
                       {"delta", m.delta},
                       {"penalty", m.penalty}});
  }
  json regions = json::array();
  for (Region r : result.regions) regions.push_back(region_name(r));
  return json{{"ranked", std::move(ranked)},
              {"rejected", result.rejected},
              {"reject_reason", reject_reason_name(result.reason)},
              {"per_stroke", std::move(strokes)},
              {"regions", std::move(regions)},
              {"shirorekha", result.shirorekha ? json(*result.shirorekha) : json(nullptr)},
              {"dtw_calls", result.dtw_calls},
              {"candidates", result.candidates}};
}

RecognitionService::RecognitionService(Model model, bool dev_mode) : model_(std::move(model)), dev_mode_(dev_mode) {
  if (model_.template_count() == 0) throw ModelError("empty model");
}

HttpReply RecognitionService::recognize(const std::string& body) const {
  ParsedRequest req;
  try {
    req = parse_request(body);
  } catch (const Error& e) {
    return error_reply(400, "malformed request", e.what());
  }
  try {
    json out = recognition_to_json(inkmatch::recognize(req.symbol, model_, req.topk));
    out["model_version"] = Model::kFormatVersion;
    return {200, out.dump()};
  } catch (const Error& e) {
    // Degenerate geometry (zero extent, single-point strokes) is a client error.
    return error_reply(400, "unrecognizable ink", e.what());
  }
}

HttpReply RecognitionService::model_info() const {
  json classes = json::array();
  for (const ClassTemplates& c : model_.classes) {
    json groups = json::array();
    for (const auto& [count, group] : c.groups) {
      json regions = json::object();
      for (Region r : kAllRegions) {
        if (!group.at(r).empty()) regions[std::string(region_name(r))] = group.at(r).size();
      }
      groups.push_back({{"strokes", count}, {"templates", std::move(regions)}});
    }
    classes.push_back({{"label", c.label}, {"groups", std::move(groups)}});
  }
  const json info{{"model_version", Model::kFormatVersion},
                  {"class_count", model_.class_count},
                  {"template_count", model_.template_count()},
                  {"classes", std::move(classes)},
                  {"config", to_json(model_.config)}};
  return {200, info.dump()};
}

HttpReply RecognitionService::health() const { return {200, R"({"status":"ok"})"}; }

HttpReply RecognitionService::echo(const std::string& body) const {
  if (!dev_mode_) return error_reply(404, "not found", "echo is only available in dev mode");
  try {
    const ParsedRequest req = parse_request(body);
    return {200, json{{"strokes", symbol_to_json(req.symbol)["strokes"]}}.dump()};
  } catch (const Error& e) {
    return error_reply(400, "malformed request", e.what());
  }
}

BindAddress parse_bind_address(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw Error("bind address must be host:port, got \"" + text + "\"");
  BindAddress out;
  out.host = text.substr(0, colon);
  const std::string port = text.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), out.port);
  if (ec != std::errc() || ptr != port.data() + port.size() || out.port < 0 || out.port > 65535)
    throw Error("invalid port \"" + port + "\"");
  return out;
}

HttpServer::HttpServer(const RecognitionService& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server_->Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server_->Post("/recognize", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service_.recognize(req.body));
  });
  server_->Get("/model/info", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, service_.model_info());
  });
  server_->Get("/healthz", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, service_.health());
  });
  if (service_.dev_mode()) {
    server_->Post("/echo", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, service_.echo(req.body));
    });
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const BindAddress& address) {
  int port = address.port;
  if (port == 0) {
    port = server_->bind_to_any_port(address.host);
  } else if (!server_->bind_to_port(address.host, port)) {
    port = -1;
  }
  if (port < 0) throw Error("cannot bind " + address.host + ":" + std::to_string(address.port));
  return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

int HttpServer::start(const BindAddress& address) {
  const int port = bind(address);
  worker_ = std::thread([this] { listen(); });
  server_->wait_until_ready();
  return port;
}

void HttpServer::stop() {
  if (server_) server_->stop();
  if (worker_.joinable()) worker_.join();
}

}  // namespace inkmatch
