// Copyright 2026 The latgate Authors
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

#include "latgate/log.h"

#include <atomic>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>

namespace latgate {

namespace {

int initial_level() {
    const char *env = std::getenv("LATGATE_LOG");
    if (env == nullptr) {
        return 0;
    }
    return std::atoi(env);
}

std::atomic<int> &level_ref() {
    static std::atomic<int> level{initial_level()};
    return level;
}

void vlog(const char *tag, const char *fmt, va_list args) {
    std::fprintf(stderr, "[latgate %s] ", tag);
    std::vfprintf(stderr, fmt, args);
    std::fputc('\n', stderr);
}

}  // namespace

int log_level() {
    return level_ref().load();
}

void set_log_level(int level) {
    level_ref().store(level);
}

void log_info(const char *fmt, ...) {
    if (log_level() < 1) {
        return;
    }
    va_list args;
    va_start(args, fmt);
    vlog("info", fmt, args);
    va_end(args);
}

void log_debug(const char *fmt, ...) {
    if (log_level() < 2) {
        return;
    }
    va_list args;
    va_start(args, fmt);
    vlog("debug", fmt, args);
    va_end(args);
}

}  // namespace latgate
