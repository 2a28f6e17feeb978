import contextlib
import os
import shutil
import tempfile

from ridgekit.testing import TestCase
from ridgekit.utils.filesystem import CONFIG_FILE


class RKTestBase(TestCase):
    """Base class for ridgekit tests that touch the filesystem.

    Its side effect is that it changes the home directory before each test
    runs, so no developer :file:`.ridgekitrc` leaks into the results.
    """

    def setUp(self):
        super(RKTestBase, self).setUp()

        self._old_cwd = os.getcwd()
        self._tempdirs = []
        self.old_home = os.environ.get('HOME')
        self.set_user_home_tmp()

    def tearDown(self):
        super(RKTestBase, self).tearDown()

        os.chdir(self._old_cwd)

        for tmpdir in self._tempdirs:
            shutil.rmtree(tmpdir, ignore_errors=True)

        if self.old_home:
            os.environ['HOME'] = self.old_home

    def make_tempdir(self, parent=None):
        """Create a temporary directory removed when the test ends.

        Args:
            parent (str, optional):
                An optional parent directory to create the path in.

        Returns:
            str:
            The name of the new temporary directory.
        """
        tmpdir = tempfile.mkdtemp(prefix='ridgekit.', dir=parent)
        self._tempdirs.append(tmpdir)

        return tmpdir

    def chdir_tmp(self, dir=None):
        """Changes current directory to a temporary directory."""
        dirname = self.make_tempdir(parent=dir)
        os.chdir(dirname)
        return dirname

    def get_user_home(self):
        """Returns current user's home directory."""
        return os.environ['HOME']

    def set_user_home(self, path):
        """Set home directory of current user."""
        os.environ['HOME'] = path

    def set_user_home_tmp(self):
        """Set temporary directory as current user's home."""
        self.set_user_home(self.make_tempdir())

    @contextlib.contextmanager
    def ridgekitrc(self, data, use_temp_dir=False):
        """Manage a temporary .ridgekitrc file.

        Args:
            data (dict):
                A dictionary of key-value pairs to write into the
                .ridgekitrc file. Values are written with ``repr``.

            use_temp_dir (bool, optional):
                Create a temporary directory and use it as the working
                directory for the context.
        """
        if use_temp_dir:
            temp_dir = tempfile.mkdtemp()
            cwd = os.getcwd()
            os.chdir(temp_dir)

        with open(CONFIG_FILE, 'w') as fp:
            for key, value in data.items():
                fp.write('%s = %r\n' % (key, value))

        try:
            yield
        finally:
            if use_temp_dir:
                os.chdir(cwd)
                shutil.rmtree(temp_dir)
            else:
                os.unlink(CONFIG_FILE)
