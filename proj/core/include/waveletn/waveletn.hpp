// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include "waveletn/cascade.hpp"
#include "waveletn/cuntz.hpp"
#include "waveletn/diagonal.hpp"
#include "waveletn/error.hpp"
#include "waveletn/filterbank.hpp"
#include "waveletn/laurent.hpp"
#include "waveletn/multiscale.hpp"
#include "waveletn/pyramid.hpp"
#include "waveletn/transfer.hpp"
