//------------------------------------------------------------------------------
//
//   Copyright 2026 The IAA Toolkit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#include "iaa/cli/server.hpp"

#include "iaa/error.hpp"

#include <httplib.h>
#include <json.hpp>

namespace iaa::cli {

namespace {

int status_for(ErrorCode code)
{
  switch (code)
  {
  case ErrorCode::DuplicateResponse:
    return 409;
  case ErrorCode::Io:
    return 500;
  default:
    return 400;
  }
}

std::string error_body(ErrorCode code, std::string const &message)
{
  nlohmann::ordered_json body;
  body["error"]   = std::string{to_string(code)};
  body["message"] = message;
  return body.dump();
}

constexpr char const *kFallbackPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>Interval survey</title></head>
<body>
<p>No capture UI assets are configured. Start the server with <code>--assets DIR</code>.</p>
<ul>
<li>GET <a href="/api/survey">/api/survey</a></li>
<li>POST /api/responses</li>
<li>GET <a href="/api/export">/api/export</a></li>
</ul>
</body></html>
)";

}  // namespace

struct CaptureServer::Impl
{
  explicit Impl(ResponseStore &s)
    : store(s)
  {}

  ResponseStore  &store;
  httplib::Server server;
};

CaptureServer::CaptureServer(ResponseStore &store, std::string assets_dir)
  : impl_(std::make_unique<Impl>(store))
{
  auto &srv = impl_->server;

  srv.Get("/api/survey", [this](httplib::Request const &, httplib::Response &res) {
    res.set_content(survey_to_json(impl_->store.survey()), "application/json");
  });

  srv.Get("/api/export", [this](httplib::Request const &, httplib::Response &res) {
    res.set_content(impl_->store.export_json(), "application/json");
  });

  srv.Post("/api/responses", [this](httplib::Request const &req, httplib::Response &res) {
    try
    {
      auto const submission = parse_submission(req.body);
      auto const outcome    = impl_->store.submit(submission);
      nlohmann::ordered_json body;
      body["status"]  = outcome == ResponseStore::Outcome::Accepted ? "accepted" : "replayed";
      body["records"] = submission.responses.size();
      res.status      = outcome == ResponseStore::Outcome::Accepted ? 201 : 200;
      res.set_content(body.dump(), "application/json");
    }
    catch (Error const &e)
    {
      res.status = status_for(e.code());
      res.set_content(error_body(e.code(), e.what()), "application/json");
    }
  });

  if (!assets_dir.empty())
  {
    if (!srv.set_mount_point("/", assets_dir))
    {
      throw Error(ErrorCode::Io, "asset directory '" + assets_dir + "' does not exist");
    }
  }
  else
  {
    srv.Get("/", [](httplib::Request const &, httplib::Response &res) { res.set_content(kFallbackPage, "text/html"); });
  }
}

CaptureServer::~CaptureServer()
{
  stop();
}

int CaptureServer::bind(std::string const &host, int port)
{
  auto &srv = impl_->server;
  int   bound;
  if (port == 0)
  {
    bound = srv.bind_to_any_port(host);
  }
  else
  {
    bound = srv.bind_to_port(host, port) ? port : -1;
  }
  if (bound < 0)
  {
    throw Error(ErrorCode::Io, "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void CaptureServer::run()
{
  impl_->server.listen_after_bind();
}

void CaptureServer::stop()
{
  if (impl_)
  {
    impl_->server.stop();
  }
}

}  // namespace iaa::cli
