"""CSV tables and run manifests."""

import csv
import io
import json
import logging
import platform

from ridgekit.utils.filesystem import ensure_parent_dir


logger = logging.getLogger(__name__)


#: The exponent of π used by the rate bound, and the alternative form.
PI_EXPONENTS = {
    'used': '(m+1)/4',
    'alternative': 'm/4',
}


def _format_cell(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'

    if isinstance(value, float):
        return '%.17g' % value

    if isinstance(value, (list, tuple)):
        return ' '.join(_format_cell(item) for item in value)

    if value is None:
        return ''

    return str(value)


def write_csv_stream(rows, columns, fp):
    """Write ``rows`` (dicts) to an open text stream in column order."""
    writer = csv.writer(fp, lineterminator='\n')
    writer.writerow(columns)

    for row in rows:
        writer.writerow([_format_cell(row.get(column)) for column in columns])


def write_csv(rows, columns, path):
    """Write ``rows`` (dicts) to ``path`` with a fixed column order.

    Floats use 17 significant digits so reruns compare byte for byte.
    """
    ensure_parent_dir(path)

    with io.open(path, 'w', encoding='utf-8', newline='') as fp:
        write_csv_stream(rows, columns, fp)

    logger.debug('Wrote %d rows to %s', len(rows), path)


def write_manifest(path, config, seeds, version, wall_time, checks,
                   extra=None):
    """Write a JSON run manifest with sorted keys.

    Args:
        path (str):
            The output path.

        config (dict):
            The configuration echo.

        seeds (list of int):
            The seeds used.

        version (str):
            The library version.

        wall_time (float):
            Elapsed seconds.

        checks (dict):
            Pass/fail results by name.

        extra (dict, optional):
            Additional entries.
    """
    manifest = {
        'config': config,
        'seeds': list(seeds),
        'version': version,
        'python_version': platform.python_version(),
        'wall_time': wall_time,
        'checks': checks,
        'passed': all(checks.values()),
        'pi_exponent_discrepancy': PI_EXPONENTS,
    }

    if extra:
        manifest.update(extra)

    ensure_parent_dir(path)

    with io.open(path, 'w', encoding='utf-8') as fp:
        json.dump(manifest, fp, indent=2, sort_keys=True)
        fp.write('\n')

    return manifest
