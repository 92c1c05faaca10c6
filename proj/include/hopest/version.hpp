// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#define HOPEST_VERSION_MAJOR 0
#define HOPEST_VERSION_MINOR 1
#define HOPEST_VERSION_PATCH 0
#define HOPEST_VERSION_STRING "0.1.0"
