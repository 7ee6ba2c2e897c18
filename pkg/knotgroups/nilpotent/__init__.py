# Free nilpotent groups and lower central series
