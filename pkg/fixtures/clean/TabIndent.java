class TabIndent
{
	private int size = 4;

	int grow(int by)
	{
		if (by > 0)
		{
			size = size + by;
		}
		return size;
	}
}
