from fs_lab.cli import main

raise SystemExit(main())
