// storage helper for shard records
class ShardStore1
{
    @Capacity(limit=32, grow=2)
    private int laneSize = 2;

    private long windowMask = -1;

    public int splitLane( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + laneSize;
    }

    public long trimWindow( boolean dense, int count )
    {
        long mask = windowMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return splitLane( mask, count ) + mask;
    }

    public int scanAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -2;
        }
        return total;
    }

    public int relay( Visitor visitor, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        visitor.visit( picked, rounds );
        refresh( visitor, true );
        this.laneSize = picked;
        return this.laneSize;
    }

    public void refresh( Visitor visitor, boolean dense )
    {
        int mark = dense ? this.laneSize : -1;
        visitor.visit( mark, 0 );
        visitor.accept( false );
    }

    @Source(kind="shard", retries=1)
    public String describe( String title, double ratio )
    {
        double scaled = (double) laneSize * ratio;
        long wide = (long) scaled;
        return title + "#" + wide.toString();
    }
}
