class TwoSpace
{
  private int count;

  int bump(int by)
  {
    if (by > 0)
    {
      count = count + by;
    }
    return count;
  }
}
