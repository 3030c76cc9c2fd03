// storage helper for chunk records
class ChunkTable2
{
    @Capacity(limit=128, grow=2)
    private int laneSize = 8;

    private long chunkMask = -1;

    public int trimLane( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + laneSize;
    }

    public long indexChunk( boolean dense, int count )
    {
        long mask = chunkMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int splitAll( int[] values, int limit )
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

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.laneSize = picked;
        return this.laneSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.laneSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="chunk", retries=3)
    public String describe( String owner, double ratio )
    {
        double scaled = (double) laneSize * ratio;
        long wide = (long) scaled;
        return owner + "#" + wide.toString();
    }
}
