// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include "waveliq/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace waveliq::log {

namespace {

Level parse_env() {
    const char* env = std::getenv("WAVELIQ_LOG");
    if (env == nullptr) {
        return Level::Warn;
    }
    if (std::strcmp(env, "error") == 0) return Level::Error;
    if (std::strcmp(env, "warn") == 0) return Level::Warn;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    return Level::Warn;
}

Level g_threshold = parse_env();

const char* tag(Level lvl) {
    switch (lvl) {
    case Level::Error: return "error";
    case Level::Warn: return "warn";
    case Level::Info: return "info";
    case Level::Debug: return "debug";
    }
    return "?";
}

} // namespace

Level threshold() { return g_threshold; }

void set_threshold(Level lvl) { g_threshold = lvl; }

void emit(Level lvl, const std::string& msg) {
    if (static_cast<int>(lvl) <= static_cast<int>(g_threshold)) {
        std::fprintf(stderr, "waveliq [%s] %s\n", tag(lvl), msg.c_str());
    }
}

} // namespace waveliq::log
