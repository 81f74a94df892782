# Copyright 2026 The Valet Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Imperfect-information card game engine, agents and metrics."""

import json

from ._valet import (
    ArgumentError,
    ConfigError,
    Error,
    IllegalMoveError,
    ParseError,
    Session,
    analyze,
    game_ids,
    infoflow,
    metadata_json,
    run_experiment,
    simulate,
)

__all__ = [
    "ArgumentError",
    "ConfigError",
    "Error",
    "IllegalMoveError",
    "ParseError",
    "Session",
    "analyze",
    "game_ids",
    "games",
    "infoflow",
    "metadata_json",
    "run_experiment",
    "simulate",
]


def games():
    """Metadata of every registered game as a list of dicts."""
    return json.loads(metadata_json())
