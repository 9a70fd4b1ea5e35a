/*
 * Copyright 2026 the netres authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NETRES_NETRES_HPP
#define NETRES_NETRES_HPP

#include "netres/chebyshev.hpp"
#include "netres/error.hpp"
#include "netres/format.hpp"
#include "netres/generate.hpp"
#include "netres/io.hpp"
#include "netres/kernel_matrix.hpp"
#include "netres/network.hpp"
#include "netres/potential.hpp"
#include "netres/subdivision.hpp"
#include "netres/subdivision_kernels.hpp"
#include "netres/verify.hpp"
#include "netres/vertex_function.hpp"
#include "netres/wheel.hpp"

#endif  // NETRES_NETRES_HPP
